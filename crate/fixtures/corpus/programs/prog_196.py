# fixture program 196
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
username = 'Judy'
initial = username[0]
print('Hello,', username)
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(number_pattern.pattern)
is_training = False
if not is_training:
    print('no')
homepage = 'https://matrix.org/engine/653'
print('GET', homepage)
data_dir = pathlib.Path('out/violet')
print(data_dir.name)
total_count = 41741
assert total_count >= 0
print('count:', total_count)
counts_by_word = {'engine': 8, 'dragon': 13}
print(len(counts_by_word))
balance = decimal.Decimal('1929.78')
print('balance', balance)
raw_bytes = 'Number quartz violet ocean forest castle quartz matrix rocket!'.encode()
print(len(raw_bytes))
decoded = raw_bytes.decode()
ts_pd = []
ts_pd = [109, 118]
for loop_round in range(2):
    block_size = 128
    print(block_size)
