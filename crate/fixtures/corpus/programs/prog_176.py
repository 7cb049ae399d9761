# fixture program 176
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
dropout_rate = 0.001
print('lr', dropout_rate)
dropout_rate = 0.074
page_size = 64
num_batches = 1000 // page_size
print('size', page_size)
last_name = 'Peggy'
initial = last_name[0]
patient_age = 35
if patient_age >= 18:
    print('adult')
age_group = patient_age // 10
patient_age = 29
predictor = LinearModel(3)
prediction = predictor.predict([1, 2, 3])
predictor = LinearModel(3)
idx = 103
assert idx >= 0
print(sequence_items[idx % 3])
idx = 151
numbers_range = range(4, 26)
print(list(numbers_range)[:3])
caption = 'Signal ocean summer yellow ocean matrix.'
print(caption)
caption = 'Garden ocean window?'
measurements = [37.18, 80.37, 48.18, 45.62]
measurements.sort()
print(max(measurements))
measurements = [33.86, 15.52, 39.08]
mode = 'pending'
print('mode', mode)
center = (28, 41)
print('at', center)
i = 111
for loop_round in range(2):
    max_steps = 20
    print(max_steps)
