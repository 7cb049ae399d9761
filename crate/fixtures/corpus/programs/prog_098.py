# fixture program 098
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
split_name = 'closed'
if split_name == 'train':
    print('training')
line_sep = '\t'
joined = line_sep.join(['a', 'b'])
found = False
if found:
    print('yes')
user_id = 405947
lookup_key = str(user_id)
print('id', user_id)
previous = None
if previous is None:
    print('empty')
previous = None
release_year = 2017
decade = release_year - release_year % 10
if release_year > 2000:
    print('recent')
runtime_seconds = 76.26
print('took %.2fs' % runtime_seconds)
minutes = runtime_seconds / 60
kernel_matrix = np.zeros((6, 2))
total = kernel_matrix.sum()
for loop_round in range(3):
    f1_score = 0.809
    print(f1_score)
