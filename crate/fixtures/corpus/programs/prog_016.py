# fixture program 016
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
kernel_matrix = np.ones((6, 6), dtype=int)
kernel_matrix = kernel_matrix * 2
total = kernel_matrix.sum()
kernel_matrix = np.arange(30).reshape(6, 5)
precision_score = 0.086
if precision_score < 0.9:
    print('low')
feature_name = 'forest_id'
print('column', feature_name)
lookup = {feature_name: 0}
feature_name = 'report'
counts_by_word = {'island': 12, 'candle': 5, 'dragon': 17, 'vector': 11, 'wizard': 45}
for dict_key in counts_by_word:
    print(dict_key)
prices = [51.11, 72.39, 53.73, 51.68, 11.13, 42.4, 98.26, 84.21, 41.32]
prices.sort()
num_rows = 25
assert num_rows >= 0
num_rows += 1
contact_email = 'judy.python@tunnel.com'
domain = contact_email.split('@')[1]
print('mail to', contact_email)
description = 'Forest island rocket tunnel.'
description = description.strip()
word_list = description.split()
enabled = True
if enabled:
    print('yes')
n = 28725
k = 238
for loop_round in range(3):
    end_year = 2018
    print(end_year)
