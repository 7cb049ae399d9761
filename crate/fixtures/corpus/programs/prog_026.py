# fixture program 026
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
timestamp_str = '1993-03-24'
year_part = timestamp_str[:4]
print('date', timestamp_str)
transform = lambda x: x + 1
output = transform(4)
selected_ids = {301, 44}
selected_ids.add(7)
step_range = range(5, 6)
print(list(step_range)[:3])
n_items = 257
print('count:', n_items)
assert n_items >= 0
match = None
if match is None:
    print('empty')
rewards = [12.07, 32.81, 58.35, 44.34, 92.74, 78.51, 35.53, 2.77, 54.33, 60.67]
mean_val = sum(rewards) / len(rewards)
row_index = 225
row_index = row_index + 1
assert row_index >= 0
height = 191.536
print('measured', height)
learning_rate = 0.005
step_value = learning_rate * 0.5
print('lr', learning_rate)
vocabulary_set = frozenset(['apple', 'silver', 'castle'])
print(len(vocabulary_set))
for loop_round in range(3):
    num_rows = 27152
    print(num_rows)
