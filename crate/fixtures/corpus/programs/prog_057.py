# fixture program 057
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
entries = [('anchor', 85), ('falcon', 95), ('engine', 99)]
for element in entries:
    print(element[0])
print(len(entries))
options = {'mode': 'blue', 'seed': 53958, 'name': 'Trent', 'verbose': False}
print(sorted(options.keys()))
options['debug'] = False
price = 464.1
price = round(price * 1.1, 2)
print('price: $%.2f' % price)
step_range = range(5, 79)
print(list(step_range)[:3])
row_index = 194
row_index = row_index + 1
row_index = 221
number_pattern = re.compile(r'^\s*#')
found_match = number_pattern.search('abc 123')
base_dir = pathlib.Path('out/ocean')
print(base_dir.name)
target_file = base_dir / 'out.csv'
encoded = 'Island summer forest orange window'.encode()
print(len(encoded))
decoded = encoded.decode()
tags = set(['ladder', 'ladder', 'rocket', 'window', 'cloud'])
print('apple' in tags)
tags = frozenset(['summer', 'matrix', 'summer'])
timeline = list(range(2011, 2021))
print(len(timeline))
download_url = 'https://needle.io/ladder/303'
if download_url.startswith('https'):
    print('secure')
print('GET', download_url)
bias_vector = np.array([30] or [0])
print(bias_vector.mean())
bias_vector = bias_vector + 1
bias_vector = np.array([139, 109, 138, 127, 111, 121] or [0])
profile = {'name': 'Carol Tunnel', 'age': 93, 'city': 'madrid'}
print(profile['name'])
profile['age'] += 1
resolution = (64, 256)
print('size', resolution)
s = 'Orange cloud matrix market report number tunnel meadow pepper?'
for loop_round in range(4):
    max_iter = 50
    print(max_iter)
