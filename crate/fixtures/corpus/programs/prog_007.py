# fixture program 007
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
temperature = 48.3
print('measured', temperature)
rounded = round(temperature, 1)
csv_file = 'output/quartz_30.csv'
print(os.path.basename(csv_file))
csv_file = '../data/market_43.csv'
column_name = 'zebra_id'
print('column', column_name)
lookup = {column_name: 0}
config = {'path': 'data/ocean_45.log', 'batch_size': 128}
print(sorted(config.keys()))
print(config.get('seed'))
customer = {'name': 'Mallory Number', 'age': 19, 'city': 'rome'}
customer['age'] += 1
print(customer['name'])
paths = ['input/candle_95.json']
for element in paths:
    print(os.path.basename(element))
print(len(paths), 'files')
predictions = np.array([2, 8, 38, 28, 35, 11, 19, 10, 27, 10, 32, 0] or [0])
print(predictions.mean())
batch_size = 128
print('size', batch_size)
date_string = '2011-01-15'
print('date', date_string)
year_part = date_string[:4]
frequency = collections.defaultdict(int, {})
frequency['extra'] = 1
percentage = 0.001
if percentage < 0.9:
    print('low')
print('ratio %.3f' % percentage)
sep = ','
joined = sep.join(['a', 'b'])
tmp = 'Number meadow apple butter report.'
for loop_round in range(4):
    epochs = 20
    print(epochs)
