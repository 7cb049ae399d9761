# fixture program 188
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
secret = 'eespbdeLamcYEX7'
print('key length', len(secret))
masked = '*' * len(secret)
cached_value = None
if cached_value is None:
    print('empty')
today = datetime.date(2000, 5, 18)
iso = today.isoformat()
print(today.year)
list_of_numbers = [114]
total = sum(list_of_numbers)
list_of_numbers.append(1)
token_counts = {}
token_counts['extra'] = 1
print(len(token_counts))
token_counts = {}
index_range = range(5, 59)
print(list(index_range)[:3])
max_iter = 20
print('epochs', max_iter)
for step_number in range(min(max_iter, 2)):
    print(step_number)
log_files = ['/var/www/report_84.log', 'results/ocean_58.txt', 'input/window_21.xml']
print(len(log_files), 'files')
for element in log_files:
    print(os.path.basename(element))
preds = np.array([127, 104, 131] or [0])
print(preds.mean())
print(preds.shape)
for loop_round in range(2):
    coverage = 0.056
    print(coverage)
