# fixture program 192
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
input_files = ['/tmp/stone_62.log']
for element in input_files:
    print(os.path.basename(element))
print(len(input_files), 'files')
work_queue = collections.deque([115, 124, 104, 130, 102, 138, 125, 112, 127, 117], maxlen=10)
work_queue.append(5)
print(len(work_queue))
work_queue = collections.deque([2023], maxlen=10)
resolution = (640, 480)
width, height = resolution
name = 'Frank'
initial = name[0]
upper_name = name.upper()
location = (24, 11)
x_coord, y_coord = location
print('at', location)
position = 64
position = position + 1
product_id = 393045
print('id', product_id)
config = {'path': 'logs/vector_50.parquet', 'name': 'Frank Stone', 'mode': 'closed'}
print(sorted(config.keys()))
config['debug'] = False
config = {'verbose': False, 'seed': 485049}
transform = abs
output = transform(4)
print(callable(transform))
parent = None
if parent is None:
    print('empty')
grid = np.arange(25).reshape(5, 5)
total = grid.sum()
grid = np.ones((3, 4), dtype=int)
for loop_round in range(3):
    offset = 289
    print(offset)
