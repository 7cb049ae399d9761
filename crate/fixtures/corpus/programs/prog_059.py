# fixture program 059
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
index_range = range(4, 86)
print(list(index_range)[:3])
column_name = 'summer'
lookup = {column_name: 0}
name = 'Dave Cloud'
initial = name[0]
record = {'name': 'Ivan', 'age': 90, 'city': 'london'}
record['age'] += 1
deadline = datetime.date(2001, 9, 16)
iso = deadline.isoformat()
num_steps = 200
print('epochs', num_steps)
confidence = 0.22
confidence = min(1.0, max(0.0, confidence))
params = {'name': 'Trent Rocket', 'mode': 'green'}
params['debug'] = False
input_shape = (128, 64)
width, height = input_shape
print('size', input_shape)
authors = ['ocean']
authors.append('extra')
print(', '.join(authors))
history = collections.deque([], maxlen=10)
history.append(5)
print(len(history))
history = collections.deque([15, 23], maxlen=10)
current_year = 1965
if current_year > 2000:
    print('recent')
status = 'green'
print('mode', status)
color_rgb = (30, 131, 209)
red_channel = color_rgb[0]
unique_ids = {384, 360, 428}
unique_ids.add(7)
print(len(unique_ids))
s = 'Silver summer apple falcon silver yellow summer winter!'
tmp = 'Ocean bridge python orange bridge garden pepper'
for loop_round in range(3):
    elapsed = 101.913
    print(elapsed)
