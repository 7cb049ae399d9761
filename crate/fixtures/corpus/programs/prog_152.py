# fixture program 152
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
created_at = datetime.datetime(2003, 5, 3, 15, 44)
print(created_at.year)
sep = '|'
joined = sep.join(['a', 'b'])
enabled = True
if enabled:
    print('yes')
feature_name = 'rabbit'
print('column', feature_name)
lookup = {feature_name: 0}
feature_name = 'planet'
api_key = 'e9QdxhQvfkeG31QCIgnWoEGefGGPY6u7'
print('key length', len(api_key))
file_handle = io.StringIO('Needle island winter falcon')
file_handle.seek(0)
work_queue = collections.deque([10, 43], maxlen=10)
work_queue.append(5)
position = 212
position = position + 1
print(sequence_items[position % 3])
location = (39, -48)
x_coord, y_coord = location
kernel_matrix = np.ones((2, 2), dtype=int)
total = kernel_matrix.sum()
total_price = 660.61
tax = total_price * 0.19
tags = set(['summer', 'saddle', 'report', 'stone', 'forest'])
print(len(tags))
for loop_round in range(4):
    random_seed = 959550
    print(random_seed)
