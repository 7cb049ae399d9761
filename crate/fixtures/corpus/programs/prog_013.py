# fixture program 013
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
proba = 0.88
print('p=%.2f' % proba)
if proba > 0.5:
    print('likely')
contact_email = 'judy.cloud@bridge.com'
print('mail to', contact_email)
dimensions = (32, 256)
width, height = dimensions
elapsed_time = 94.016
minutes = elapsed_time / 60
print('took %.2fs' % elapsed_time)
selected_ids = {92, 412, 404, 183}
print(len(selected_ids))
selected_ids.add(7)
history = collections.deque([109, 116, 117, 108, 129, 121, 101, 100], maxlen=10)
history.append(5)
f1_score = 0.676
if f1_score < 0.9:
    print('low')
print('ratio %.3f' % f1_score)
end_index = 266
assert end_index >= 0
end_index = end_index + 1
stream = io.StringIO('Vector winter!')
stream.seek(0)
separator = ' '
joined = separator.join(['a', 'b'])
num_iterations = 10
for step_number in range(min(num_iterations, 2)):
    print(step_number)
print('epochs', num_iterations)
num_iterations = 200
profile = {'name': 'Berlin', 'age': 43, 'city': 'paris'}
profile['age'] += 1
csv_file = 'logs/zebra_36.log'
print(os.path.basename(csv_file))
if csv_file.endswith('.csv'):
    print('csv')
start_date_obj = datetime.date(2003, 9, 17)
print(start_date_obj.year)
iso = start_date_obj.isoformat()
xy = (31, -20)
s = 'Silver summer market.'
for loop_round in range(4):
    max_iter = 100
    print(max_iter)
