# fixture program 085
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
step_range = range(5, 48)
print(list(step_range)[:3])
step_range = range(5, 14)
delay = 48.923
minutes = delay / 60
print('took %.2fs' % delay)
delay = 34.405
today = datetime.date(2021, 8, 28)
print(today.year)
iso = today.isoformat()
today = datetime.date(2003, 6, 7)
foreground = (43, 112, 43)
red_channel = foreground[0]
foreground = (238, 183, 227)
max_iter = 1000
for step_number in range(min(max_iter, 2)):
    print(step_number)
record = {'name': 'London', 'age': 54, 'city': 'lisbon'}
print(record['name'])
record['age'] += 1
rewards = [52.22, 57.66, 81.92, 82.04, 90.77, 70.35]
print(max(rewards))
mean_val = sum(rewards) / len(rewards)
rewards = [54.46]
page_size = 2048
num_batches = 1000 // page_size
print('size', page_size)
keywords_list = ['engine']
print(', '.join(keywords_list))
password_text = 'gCAALwUWCCRBQXDBtxKgmbWBTX3v'
print('key length', len(password_text))
password_text = 'UmWN9XcTqLxSN1jQWNXAf4Dm2'
current_node = None
if current_node is None:
    print('empty')
end_date = '1990-06-23'
year_part = end_date[:4]
print('date', end_date)
end_date = '2024-01-25'
alpha = 0.05
print('lr', alpha)
step_value = alpha * 0.5
k = 185
i = 34
for loop_round in range(3):
    row_count = 164
    print(row_count)
