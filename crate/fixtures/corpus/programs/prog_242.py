# fixture program 242
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
timestamp_str = '1994-05-22'
print('date', timestamp_str)
ratio = 0.334
if ratio < 0.9:
    print('low')
print('ratio %.3f' % ratio)
features = np.zeros((58, 32))
total = features.sum()
features = features * 2
features = np.zeros((6, 6))
columns = ['warsaw', 'lisbon', 'dublin']
columns.append('extra')
for element in columns:
    print(element)
data_frame = pd.DataFrame({'price': [93, 35], 'age': [29, 98], 'city': [32, 1]})
print(data_frame.columns.tolist())
start_date_obj = datetime.date(2001, 6, 3)
print(start_date_obj.year)
sep = '\t'
joined = sep.join(['a', 'b'])
column_name = 'signal'
print('column', column_name)
author = 'Erin'
print('Hello,', author)
initial = author[0]
url = 'https://garden.org/signal/487'
host = url.split('/')[2]
model = DecisionTree(depth=4)
prediction = model.predict([1, 2, 3])
model = LinearModel(3)
confidence = 0.6179
confidence = min(1.0, max(0.0, confidence))
print('p=%.2f' % confidence)
confidence = 0.94
df = pd.DataFrame({'price': [65, 42], 'age': [74, 98], 'name': [55, 45]})
a = 439
ts_pd = [17, 19, 37, 38, 38, 42, 46, 14, 20, 22, 44, 21]
for loop_round in range(3):
    cost = 2955.01
    print(cost)
