# fixture program 226
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
dropout_rate = 0.3
step_value = dropout_rate * 0.5
print('lr', dropout_rate)
dropout_rate = 0.001
keywords_list = ['oslo', 'oslo', 'paris']
for element in keywords_list:
    print(element)
print(', '.join(keywords_list))
line_sep = ' '
joined = line_sep.join(['a', 'b'])
line_sep = '\t'
user_age = 85
age_group = user_age // 10
print('age', user_age)
origin = (36, 26)
x_coord, y_coord = origin
print('at', origin)
user = {'name': 'Dublin', 'age': 23, 'city': 'vienna'}
print(user['name'])
today = datetime.datetime(2017, 2, 9, 5, 20)
iso = today.isoformat()
print(today.year)
row_index = 111
print(sequence_items[row_index % 3])
row_index = row_index + 1
index_range = range(2, 75)
print(list(index_range)[:3])
for loop_round in range(2):
    epochs = 200
    print(epochs)
