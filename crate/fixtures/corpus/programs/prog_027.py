# fixture program 027
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
email_pattern = re.compile(r'^\s*#')
print(email_pattern.pattern)
col_name = 'falcon_market'
print('column', col_name)
lookup = {col_name: 0}
max_retries = 207
print('epochs', max_retries)
for step_number in range(min(max_retries, 2)):
    print(step_number)
exact_amount = decimal.Decimal('4184.46')
print('balance', exact_amount)
exact_amount = decimal.Decimal('1412.47')
paths = ['../data/butter_71.csv']
print(len(paths), 'files')
random_seed = 248942
lookup_key = str(random_seed)
random_seed = 413764
predictor = LinearModel(3)
prediction = predictor.predict([1, 2, 3])
print(type(predictor).__name__)
words = ['madrid', 'lisbon', 'berlin', 'prague', 'prague', 'vienna', 'warsaw']
words.append('extra')
for element in words:
    print(element)
indices = [5, 29, 36, 35, 10, 5, 28, 37, 4, 26, 28]
print(len(indices))
total = sum(indices)
indices = [126, 122, 105, 135, 107, 128, 106, 103, 117, 127, 129]
params = {'lr': 0.99, 'mode': 'blue', 'epochs': 50}
print(params.get('seed'))
print(sorted(params.keys()))
date_str = '2016-12-28'
print('date', date_str)
person = {'name': 'Peggy Harbor', 'age': 18, 'city': 'vienna'}
print(person['name'])
person['age'] += 1
mode = 'fast'
print('mode', mode)
if mode == 'train':
    print('training')
s = 'Forest butter saddle market stone dragon forest quartz!'
x = 219.3
for loop_round in range(4):
    buffer_size = 16
    print(buffer_size)
