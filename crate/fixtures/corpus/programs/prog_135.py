# fixture program 135
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
threshold = 0.603
threshold = min(1.0, max(0.0, threshold))
if threshold > 0.5:
    print('likely')
user_id = 321347
print('id', user_id)
lookup_key = str(user_id)
histogram = {}
print(len(histogram))
background = (189, 92, 52)
red_channel = background[0]
background = (250, 207, 52)
index_range = range(4, 55)
print(list(index_range)[:3])
arguments = {'path': 'input/anchor_26.parquet', 'epochs': 100}
print(arguments.get('seed'))
print(sorted(arguments.keys()))
weights = np.ones((2, 3), dtype=int)
total = weights.sum()
print(weights.shape)
model_dir = pathlib.Path('models/silver')
target_file = model_dir / 'out.csv'
print(model_dir.name)
model_dir = pathlib.Path('/tmp/market')
file_name = '/var/www/dragon_69.parquet'
extension = os.path.splitext(file_name)[1]
k = 87
for loop_round in range(2):
    index = 175
    print(index)
