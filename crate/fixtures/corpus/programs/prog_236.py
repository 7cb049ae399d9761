# fixture program 236
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
transform = helper
output = transform(4)
print(callable(transform))
base_url = 'https://ocean.io/number/622'
if base_url.startswith('https'):
    print('secure')
print('GET', base_url)
base_url = 'https://harbor.io/quartz/693'
num_items = 32624
assert num_items >= 0
current_node = None
if current_node is None:
    print('empty')
net = DecisionTree(depth=4)
prediction = net.predict([1, 2, 3])
unique_words = set(['python', 'planet', 'market'])
print('apple' in unique_words)
print(len(unique_words))
price = 371.27
tax = price * 0.19
account_balance = decimal.Decimal('9303.41')
print('balance', account_balance)
account_balance = decimal.Decimal('847.58')
coverage = 0.419
print('ratio %.3f' % coverage)
if coverage < 0.9:
    print('low')
for loop_round in range(4):
    end_year = 1958
    print(end_year)
