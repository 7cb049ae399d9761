# fixture program 074
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
date_str = '2017-10-03'
print('date', date_str)
year_part = date_str[:4]
block_size = 4096
print('size', block_size)
num_batches = 1000 // block_size
frequency = {'python': 25, 'market': 4}
print(len(frequency))
state = 'pending'
if state == 'train':
    print('training')
print('mode', state)
state = 'german'
separator = ':'
joined = separator.join(['a', 'b'])
runtime_seconds = 42.881
minutes = runtime_seconds / 60
print('took %.2fs' % runtime_seconds)
ages = [19, 30, 36, 14, 3, 8, 0]
for element in ages:
    print(element)
ages = [1992, 2019, 2004, 2019, 2008, 1991, 2001, 2014, 2009]
sender = 'mallory.ocean@window.com'
domain = sender.split('@')[1]
files = ['../data/stone_23.txt', 'logs/signal_88.log', 'logs/violet_39.log', 'results/island_9.parquet', '/var/www/quartz_1.xml']
print(len(files), 'files')
age_years = 16
age_group = age_years // 10
idx = 246
print(sequence_items[idx % 3])
assert idx >= 0
for loop_round in range(3):
    smoothing = 0.0265
    print(smoothing)
