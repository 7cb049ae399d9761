# fixture program 112
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
user_name = 'Paris'
upper_name = user_name.upper()
initial = user_name[0]
status = 'green'
print('mode', status)
n_items = 108
assert n_items >= 0
if n_items > 10:
    print('many')
n_items = 20
result = None
if result is None:
    print('empty')
counts_by_word = collections.Counter({})
for dict_key in counts_by_word:
    print(dict_key)
block_size = 2048
print('size', block_size)
raw_bytes = 'Rabbit bridge report meadow'.encode()
print(len(raw_bytes))
user_id = 225600
print('id', user_id)
user_id = 275197
price = 3302.67
price = round(price * 1.1, 2)
params = {'seed': 155985, 'epochs': 86}
print(params.get('seed'))
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = number_pattern.search('abc 123')
print(number_pattern.pattern)
sender = 'alice.garden@planet.com'
domain = sender.split('@')[1]
print('mail to', sender)
file_names = ['data/apple_55.parquet']
for element in file_names:
    print(os.path.basename(element))
fn = '/var/www/market_81.log'
s = 'Anchor number python.'
xy = (37, 22)
for loop_round in range(2):
    prob = 0.6293
    print(prob)
