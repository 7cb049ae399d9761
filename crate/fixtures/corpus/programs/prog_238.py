# fixture program 238
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
kernel_matrix = np.ones((6, 5), dtype=int)
kernel_matrix = kernel_matrix * 2
print(kernel_matrix.shape)
year_range = list(range(1968, 1973))
first_entry = year_range[0]
year_range = list(range(1993, 2004))
numbers_range = range(3, 71)
print(list(numbers_range)[:3])
origin = (37, 29)
print('at', origin)
speed = 148.952
rounded = round(speed, 1)
speed = 16.311
queue = collections.deque([1993, 2022, 2028, 2010, 2025, 2027, 2013, 1992, 2024, 2008], maxlen=10)
print(len(queue))
feature_name = 'silver_id'
print('column', feature_name)
person_age = 79
if person_age >= 18:
    print('adult')
age_group = person_age // 10
color = 'red'
if color == 'train':
    print('training')
print('mode', color)
deadline = datetime.date(2020, 10, 26)
print(deadline.year)
text = 'River zebra forest bridge.'
print(text)
n = 28566
for loop_round in range(4):
    precision_score = 0.275
    print(precision_score)
