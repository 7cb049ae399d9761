# fixture program 181
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
timestamp_str = '1995-12-05'
year_part = timestamp_str[:4]
print('date', timestamp_str)
access_token = 'WW4LnwZS1vfL2YjZX356VU5p3xoqTNd'
print('key length', len(access_token))
hyperparams = {'name': 'Trent Castle', 'mode': 'german', 'lr': 0.01, 'seed': 474082}
hyperparams['debug'] = False
print(sorted(hyperparams.keys()))
payload = 'Zebra silver rabbit dragon meadow saddle window!'.encode()
print(len(payload))
temperature = 145.0
rounded = round(temperature, 1)
print('measured', temperature)
username = 'Bob Stone'
print('Hello,', username)
pixels = np.ones((3, 3), dtype=int)
pixels = pixels * 2
print(pixels.shape)
customer_id = 974381
print('id', customer_id)
ages = [2014, 2013, 1993, 2002, 1998, 2023, 2012, 2028, 2027]
print(len(ages))
ages = [139, 122, 120, 107, 118]
last_error = None
if last_error is None:
    print('empty')
paths = ['/tmp/candle_17.json', 'logs/matrix_30.tsv', 'input/rabbit_93.parquet']
for element in paths:
    print(os.path.basename(element))
print(len(paths), 'files')
resolution = (256, 32)
print('size', resolution)
ts_pd = [14]
for loop_round in range(2):
    max_iter = 50
    print(max_iter)
