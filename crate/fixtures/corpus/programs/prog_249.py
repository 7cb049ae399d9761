# fixture program 249
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
file_handle = io.StringIO('Report castle?')
first_line = file_handle.readline()
file_handle.seek(0)
account_number = 866060
lookup_key = str(account_number)
deadline = datetime.datetime(2009, 11, 18, 20, 33)
print(deadline.year)
deadline = datetime.datetime(2013, 5, 9, 17, 9)
allowed_words = frozenset(['ladder', 'anchor'])
print('apple' in allowed_words)
print(len(allowed_words))
grid = np.zeros((2, 2))
grid = grid * 2
model = LinearModel(10)
prediction = model.predict([1, 2, 3])
epsilon = 0.005
print('lr', epsilon)
epsilon = 0.001
col_name = 'meadow_ladder'
print('column', col_name)
path = 'input/violet_10.log'
extension = os.path.splitext(path)[1]
if path.endswith('.csv'):
    print('csv')
path = 'data/engine_33.tsv'
k = 199
fn = 'output/matrix_90.log'
xy = (43, 23)
for loop_round in range(2):
    idx = 136
    print(idx)
