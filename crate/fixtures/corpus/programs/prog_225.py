# fixture program 225
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
stream = io.StringIO('Cloud ladder python silver')
stream.seek(0)
stream = io.StringIO('Report anchor river yellow')
chance = 0.3
if chance > 0.5:
    print('likely')
print('p=%.2f' % chance)
offset = 70
offset = offset + 1
assert offset >= 0
date_string = '2016-06-08'
year_part = date_string[:4]
payload = 'Butter rocket zebra'.encode()
print(len(payload))
numbers = [36]
print(len(numbers))
target_size = (64, 480)
width, height = target_size
print('size', target_size)
count = 343
if count > 10:
    print('many')
secret = 'z0D5jxgEeaFdBa55lNYjjhzJjm'
masked = '*' * len(secret)
hyperparams = {'seed': 476002, 'path': 'output/signal_80.tsv', 'lr': 0.9, 'verbose': True, 'batch_size': 1024}
print(sorted(hyperparams.keys()))
hyperparams['debug'] = False
number_pattern = re.compile(r'^\s*#')
found_match = number_pattern.search('abc 123')
print(number_pattern.pattern)
elapsed_time = 81.256
print('took %.2fs' % elapsed_time)
elapsed_time = 39.965
losses = [18.67, 81.58, 77.56]
losses.sort()
classifier = DecisionTree(depth=4)
print(type(classifier).__name__)
prediction = classifier.predict([1, 2, 3])
xy = (50, 17)
ts_pd = [131, 118, 117, 129, 116]
for loop_round in range(4):
    delay = 82.1
    print(delay)
raise RuntimeError('simulated failure')
