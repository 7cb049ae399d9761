# fixture program 000
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
max_steps = 50
for step_number in range(min(max_steps, 2)):
    print(step_number)
print('epochs', max_steps)
product_id = 860199
print('id', product_id)
sep = ':'
joined = sep.join(['a', 'b'])
matrix = np.zeros((46, 21))
total = matrix.sum()
print(matrix.shape)
prices = [2.14, 29.14, 58.18, 32.83, 81.47, 73.3]
prices.sort()
today = datetime.datetime(2006, 12, 16, 9, 12)
iso = today.isoformat()
print(today.year)
timeout_seconds = 104.868
minutes = timeout_seconds / 60
arguments = {'batch_size': 1024, 'name': 'Erin Rocket', 'epochs': 1000, 'seed': 570263, 'path': '/var/www/rabbit_58.json'}
print(arguments.get('seed'))
print(sorted(arguments.keys()))
series = pd.Series([13.29, 74.96])
print(series.mean())
series = pd.Series([72.5, 49.47, 30.61])
x = 38.2
s = 'Rabbit vector report window apple candle pepper'
for loop_round in range(3):
    user_age = 62
    print(user_age)
