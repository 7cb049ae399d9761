# fixture program 138
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
secret = 'wI3FCzzD'
masked = '*' * len(secret)
print('key length', len(secret))
secret = 'WsBNuDH3iMt4V7veJlNq6f3ZBA'
payload = 'Jungle silver rabbit ocean winter dragon market falcon'.encode()
decoded = payload.decode()
payload = 'Report garden stone candle planet island harbor number'.encode()
activation = helper
print(callable(activation))
output = activation(4)
alpha = 0.1
print('lr', alpha)
step_value = alpha * 0.5
years = list(range(1970, 1972))
print(len(years))
first_entry = years[0]
model_dir = pathlib.Path('data/zebra')
print(model_dir.name)
reader = io.StringIO('Number quartz.')
reader.seek(0)
first_line = reader.readline()
date_string = '1993-07-16'
print('date', date_string)
year_part = date_string[:4]
found = False
if not found:
    print('no')
found = not found
name = 'Ivan Quartz'
initial = name[0]
name = 'Judy'
temperature = 162.78
print('measured', temperature)
arguments = {'path': 'logs/forest_42.csv', 'epochs': 100, 'mode': 'green'}
print(arguments.get('seed'))
arguments = {'path': '/tmp/report_53.xml', 'verbose': True, 'name': 'Bob'}
person = {'name': 'Judy Report', 'age': 93, 'city': 'london'}
person['age'] += 1
elapsed = 12.474
minutes = elapsed / 60
elapsed = 80.899
i = 189
ts_pd = [1998, 2000, 1993, 2024, 2000, 2014, 2021, 2030]
for loop_round in range(4):
    counter_value = 94573
    print(counter_value)
