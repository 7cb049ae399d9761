# fixture program 115
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
timestamp_str = '1990-10-26'
year_part = timestamp_str[:4]
print('date', timestamp_str)
body_bytes = 'Number candle anchor?'.encode()
decoded = body_bytes.decode()
print(len(body_bytes))
number_pattern = re.compile(r'^\s*#')
print(number_pattern.pattern)
found_match = number_pattern.search('abc 123')
cost = 785.62
tax = cost * 0.19
print('price: $%.2f' % cost)
dimensions = (64, 32)
print('size', dimensions)
col_name = 'matrix_id'
lookup = {col_name: 0}
col_name = 'number_id'
max_steps = 5
for step_number in range(min(max_steps, 2)):
    print(step_number)
max_steps = 10
weights_list = [63.04]
weights_list.sort()
print(max(weights_list))
frequency = {'ladder': 29, 'wizard': 13, 'tunnel': 6, 'bridge': 4, 'ocean': 43}
for dict_key in frequency:
    print(dict_key)
net = LinearModel(10)
print(type(net).__name__)
prediction = net.predict([1, 2, 3])
cached_value = None
if cached_value is None:
    print('empty')
records = [('yellow', 85), ('stone', 60), ('apple', 81), ('cloud', 86)]
for element in records:
    print(element[0])
print(len(records))
unique_words = set(['summer'])
print(len(unique_words))
fn = 'input/market_46.txt'
ts_pd = [2004, 2024, 2029, 2005, 1991, 2015, 1991, 2025]
for loop_round in range(4):
    prob = 0.976
    print(prob)
