# fixture program 147
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
height = 152.0
rounded = round(height, 1)
input_shape = (640, 32)
width, height = input_shape
print('size', input_shape)
unique_ids = {471}
unique_ids.add(7)
allowed_words = set(['orange', 'anchor', 'forest', 'harbor'])
print(len(allowed_words))
print('apple' in allowed_words)
comment = 'Tunnel garden python quartz number'
comment = comment.strip()
print(comment)
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = number_pattern.search('abc 123')
user_name = 'Carol'
upper_name = user_name.upper()
user_name = 'Bob'
threshold = 0.4
if threshold > 0.5:
    print('likely')
timestamp = datetime.datetime(2014, 8, 3, 13, 7)
iso = timestamp.isoformat()
start_index = 254
print(sequence_items[start_index % 3])
assert start_index >= 0
start_index = 69
n = 291
xy = (-9, -5)
for loop_round in range(3):
    weight_decay = 0.3
    print(weight_decay)
