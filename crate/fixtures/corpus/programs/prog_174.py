# fixture program 174
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
current_year = 2013
print('year', current_year)
if current_year > 2000:
    print('recent')
precision_score = 0.061
print('ratio %.3f' % precision_score)
prob = 0.1845
prob = min(1.0, max(0.0, prob))
print('p=%.2f' % prob)
prob = 0.6
password = 'XdhcAeDG4imntL'
masked = '*' * len(password)
file_names = ['logs/castle_25.xml', 'results/matrix_13.xml', '../data/orange_6.parquet', 'input/violet_99.tsv', '/tmp/dragon_35.log']
for element in file_names:
    print(os.path.basename(element))
print(len(file_names), 'files')
transform = abs
print(callable(transform))
longitude = 7.41
rounded = round(longitude, 1)
person_age = 22
if person_age >= 18:
    print('adult')
age_group = person_age // 10
found = True
found = not found
found = False
chunk_size = 128
print('size', chunk_size)
num_batches = 1000 // chunk_size
chunk_size = 128
now = datetime.date(2013, 4, 2)
iso = now.isoformat()
row_index = 119
print(sequence_items[row_index % 3])
row_index = row_index + 1
row_index = 296
iterations = 1000
for step_number in range(min(iterations, 2)):
    print(step_number)
print('epochs', iterations)
iterations = 191
s = 'Orange silver harbor signal anchor ocean falcon rocket jungle?'
for loop_round in range(3):
    timeout_seconds = 90.797
    print(timeout_seconds)
