# fixture program 168
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
index = 52
assert index >= 0
features = np.arange(12).reshape(6, 2)
total = features.sum()
number_pattern = re.compile(r'\d+')
found_match = number_pattern.search('abc 123')
timestamp = datetime.datetime(2023, 6, 3, 14, 20)
iso = timestamp.isoformat()
count = 1
assert count >= 0
count += 1
file_handle = io.StringIO('Python butter island island needle rocket harbor rocket')
file_handle.seek(0)
first_line = file_handle.readline()
file_handle = io.StringIO('Dragon rocket cloud tunnel vector jungle quartz market.')
visited_nodes = {406, 314, 5, 110, 42, 383}
print(len(visited_nodes))
visited_nodes = {351, 294}
delay = 10.444
minutes = delay / 60
model = DecisionTree(depth=4)
print(type(model).__name__)
prediction = model.predict([1, 2, 3])
password_text = '6hMFYwEBq5cCMEWX0PyitNNsncO37L'
masked = '*' * len(password_text)
print('key length', len(password_text))
signal = np.round(np.linspace(0, 1, 7), 3)
print(signal.shape)
print(signal.mean())
person = {'name': 'Peggy', 'age': 71, 'city': 'stockholm'}
person['age'] += 1
print(person['name'])
numbers_range = range(4, 62)
print(list(numbers_range)[:3])
for loop_round in range(2):
    num_items = 12960
    print(num_items)
