# fixture program 006
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
profile = {'name': 'Trent', 'age': 90, 'city': 'madrid'}
profile['age'] += 1
title = 'Zebra butter saddle wizard forest cloud?'
print(title)
title = title.strip()
n_items = 5
assert n_items >= 0
n_items = 54728
balance = decimal.Decimal('4265.54')
print('balance', balance)
date_str = '1998-12-27'
print('date', date_str)
year_part = date_str[:4]
vocab = {'river': 16, 'apple': 14, 'signal': 8, 'harbor': 41, 'rocket': 31}
print(len(vocab))
vocab['extra'] = 1
vocab = {'dragon': 46, 'butter': 34}
callback = helper
output = callback(4)
print(callable(callback))
cache_dir = pathlib.Path('logs/vector')
target_file = cache_dir / 'out.csv'
print(cache_dir.name)
num_iterations = 50
print('epochs', num_iterations)
for step_number in range(min(num_iterations, 2)):
    print(step_number)
num_iterations = 1000
attribute = 'engine_id'
lookup = {attribute: 0}
file_path = '/tmp/harbor_48.csv'
print(os.path.basename(file_path))
if file_path.endswith('.csv'):
    print('csv')
author = 'Frank Apple'
initial = author[0]
revenue = 1054.71
print('price: $%.2f' % revenue)
timeout_seconds = 27.154
print('took %.2fs' % timeout_seconds)
a = 5
for loop_round in range(2):
    num_iterations = 50
    print(num_iterations)
