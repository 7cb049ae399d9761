# fixture program 070
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
epochs = 200
print('epochs', epochs)
for step_number in range(min(epochs, 2)):
    print(step_number)
cache_dir = pathlib.Path('data/rabbit')
target_file = cache_dir / 'out.csv'
token = 'HmrpaXQjuEnpXkrW78BHxpQ'
print('key length', len(token))
masked = '*' * len(token)
column = 'winter_id'
lookup = {column: 0}
column = 'meadow_id'
balance = decimal.Decimal('8010.18')
print('balance', balance)
stopword_list = ['berlin', 'dublin', 'london', 'dublin', 'rome', 'london']
print(', '.join(stopword_list))
date_string = '2016-05-16'
print('date', date_string)
status = 'green'
if status == 'train':
    print('training')
print('mode', status)
status = 'slow'
email_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = email_pattern.search('abc 123')
print(email_pattern.pattern)
n = 5
for loop_round in range(4):
    row_count = 298
    print(row_count)
