# fixture program 064
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
runtime_seconds = 82.492
minutes = runtime_seconds / 60
hidden_size = 512
num_batches = 1000 // hidden_size
position = 2
assert position >= 0
print(sequence_items[position % 3])
user_name = 'Vienna'
upper_name = user_name.upper()
print('Hello,', user_name)
stream = io.StringIO('Winter rabbit python anchor.')
first_line = stream.readline()
path = 'logs/bridge_70.tsv'
print(os.path.basename(path))
if path.endswith('.csv'):
    print('csv')
profile = {'name': 'Alice Summer', 'age': 19, 'city': 'prague'}
profile['age'] += 1
print(profile['name'])
color = 'test'
if color == 'train':
    print('training')
color = 'fast'
unit_price = 1799.36
unit_price = round(unit_price * 1.1, 2)
year_range = list(range(1953, 1962))
first_entry = year_range[0]
print(len(year_range))
word2idx = collections.Counter({'vector': 29, 'jungle': 48, 'island': 36, 'silver': 38})
print(len(word2idx))
for dict_key in word2idx:
    print(dict_key)
k = 267
for loop_round in range(2):
    count = 7
    print(count)
