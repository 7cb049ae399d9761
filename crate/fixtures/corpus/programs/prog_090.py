# fixture program 090
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
history = collections.deque([102, 115, 121, 121, 123, 121, 123, 101, 109], maxlen=10)
history.append(5)
print(len(history))
regex = re.compile(r'^\s*#')
print(regex.pattern)
found_match = regex.search('abc 123')
date_str = '2007-11-25'
print('date', date_str)
num_samples = 42371
assert num_samples >= 0
num_samples += 1
exact_amount = decimal.Decimal('1795.84')
print('balance', exact_amount)
exact_amount = decimal.Decimal('8766.94')
word2idx = {'rabbit': 10, 'planet': 21, 'rocket': 44, 'castle': 31, 'engine': 28, 'ocean': 33}
print(len(word2idx))
file_list = ['/var/www/tunnel_28.xml', '/var/www/report_88.log', 'logs/anchor_90.log', 'data/garden_58.parquet', '/var/www/ladder_99.parquet']
for element in file_list:
    print(os.path.basename(element))
separator = ':'
joined = separator.join(['a', 'b'])
secret = 'eCbGU2Wee'
masked = '*' * len(secret)
print('key length', len(secret))
secret = 'WWCnKAGP1r1sNy'
coords = (-41, -25)
x_coord, y_coord = coords
weights = np.zeros((32, 24))
print(weights.shape)
author = 'Stockholm'
print('Hello,', author)
upper_name = author.upper()
author = 'Frank Pepper'
handler = lambda x: x * 2
print(callable(handler))
output = handler(4)
allowed_words = set(['summer'])
print('apple' in allowed_words)
i = 48
i = 38
for loop_round in range(4):
    timeout_seconds = 27.089
    print(timeout_seconds)
