# fixture program 008
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
model_dir = pathlib.Path('out/pepper')
target_file = model_dir / 'out.csv'
print(model_dir.name)
max_retries = 10
for step_number in range(min(max_retries, 2)):
    print(step_number)
print('epochs', max_retries)
max_retries = 10
password = 'v8rCUAZqf5QojW'
masked = '*' * len(password)
print('key length', len(password))
likelihood = 0.2
likelihood = min(1.0, max(0.0, likelihood))
if likelihood > 0.5:
    print('likely')
matrix = np.ones((2, 3), dtype=int)
flat = matrix.flatten()
file_handle = io.StringIO('Silver quartz engine python island market rabbit ocean stone!')
file_handle.seek(0)
start_date = '2012-07-14'
year_part = start_date[:4]
paths = ['/var/www/violet_72.json', '/tmp/summer_78.txt', 'input/zebra_5.json', 'input/anchor_55.csv']
print(len(paths), 'files')
tmp = 'Engine bridge violet dragon bridge harbor report wizard!'
for loop_round in range(4):
    fraction = 0.909
    print(fraction)
