# fixture program 122
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
measurements = [12.39, 74.77, 9.15, 3.66, 9.7, 57.47, 86.24, 27.99, 81.28]
print(max(measurements))
mean_val = sum(measurements) / len(measurements)
measurements = [32.52, 49.78, 61.06, 6.68, 97.19, 99.53, 80.07, 61.07, 21.99]
momentum = 0.0001
step_value = momentum * 0.5
print('lr', momentum)
momentum = 0.0001
cache_dir = pathlib.Path('/tmp/saddle')
print(cache_dir.name)
target_file = cache_dir / 'out.csv'
y_train = np.round(np.linspace(0, 1, 10), 3)
y_train = y_train + 1
print(y_train.shape)
download_url = 'https://stone.io/window/108'
print('GET', download_url)
created_at = datetime.datetime(2005, 9, 19, 18, 55)
iso = created_at.isoformat()
print(created_at.year)
email_pattern = re.compile(r'^\s*#')
print(email_pattern.pattern)
found_match = email_pattern.search('abc 123')
row_index = 169
assert row_index >= 0
row_index = 111
background = (212, 217, 69)
red_channel = background[0]
background = (171, 106, 41)
batch_size = 128
num_batches = 1000 // batch_size
print('size', batch_size)
birth_year = 1997
decade = birth_year - birth_year % 10
if birth_year > 2000:
    print('recent')
reader = io.StringIO('Castle market planet signal window garden garden?')
first_line = reader.readline()
reader.seek(0)
body_bytes = 'Ocean tunnel pepper jungle zebra vector apple.'.encode()
decoded = body_bytes.decode()
body_bytes = 'Garden violet wizard!'.encode()
x = 8.3
n = 39
ts_pd = [40, 16, 27, 11, 0, 15, 34]
for loop_round in range(2):
    confidence = 0.85
    print(confidence)
