# fixture program 162
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
records = [('forest', 61), ('butter', 44), ('report', 59)]
print(len(records))
target_column = 'stone_id'
lookup = {target_column: 0}
debug = False
debug = not debug
if debug:
    print('yes')
cache_dir = pathlib.Path('/tmp/pepper')
print(cache_dir.name)
target_file = cache_dir / 'out.csv'
cache_dir = pathlib.Path('out/orange')
body_bytes = 'Island ladder winter meadow.'.encode()
decoded = body_bytes.decode()
print(len(body_bytes))
body_bytes = 'Rocket tunnel planet winter?'.encode()
token = 'tsN4b4HuecVlPJ3R50EQh7p'
masked = '*' * len(token)
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = number_pattern.search('abc 123')
print(number_pattern.pattern)
price_series = pd.Series([0.15, 29.06, 97.11, 83.63, 5.18, 23.33, 64.31])
print(price_series.mean())
fraction = 0.747
if fraction < 0.9:
    print('low')
print('ratio %.3f' % fraction)
step_range = range(2, 98)
print(list(step_range)[:3])
step_range = range(3, 83)
csv_file = 'output/castle_36.tsv'
if csv_file.endswith('.csv'):
    print('csv')
n = 61378
fn = '../data/falcon_52.txt'
for loop_round in range(4):
    count = 117
    print(count)
