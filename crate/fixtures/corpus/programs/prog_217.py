# fixture program 217
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
keywords = set(['rocket'])
print(len(keywords))
window_size = 512
print('size', window_size)
window_size = 64
preprocess = abs
output = preprocess(4)
print(callable(preprocess))
customer = {'name': 'Frank Bridge', 'age': 20, 'city': 'warsaw'}
print(customer['name'])
X_test = np.round(np.random.rand(3, 6), 2)
flat = X_test.flatten()
print(X_test.shape)
last_error = None
if last_error is None:
    print('empty')
date_string = '1991-01-04'
print('date', date_string)
year_part = date_string[:4]
date_string = '2000-05-26'
reader = io.StringIO('Butter quartz matrix garden')
reader.seek(0)
first_line = reader.readline()
origin = (-6, 36)
print('at', origin)
deadline = datetime.datetime(2023, 3, 8, 13, 55)
iso = deadline.isoformat()
print(deadline.year)
s = 'Harbor violet forest!'
i = 170
for loop_round in range(3):
    max_retries = 100
    print(max_retries)
