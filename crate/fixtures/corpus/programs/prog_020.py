# fixture program 020
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
done = False
if done:
    print('yes')
if not done:
    print('no')
done = False
X_test = np.zeros((30, 20))
print(X_test.shape)
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = pattern.search('abc 123')
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
body_bytes = 'Zebra garden rabbit candle bridge castle signal orange.'.encode()
decoded = body_bytes.decode()
print(len(body_bytes))
record = {'name': 'Grace Number', 'age': 1, 'city': 'lisbon'}
record['age'] += 1
record = {'name': 'Dave', 'age': 50, 'city': 'prague'}
step_range = range(3, 32)
print(list(step_range)[:3])
periods = list(range(1955, 1957))
first_entry = periods[0]
print(len(periods))
learning_rate = 0.3
step_value = learning_rate * 0.5
y_test = np.arange(5)
y_test = y_test + 1
timestamp_str = '2018-04-15'
print('date', timestamp_str)
age = 89
print('age', age)
exact_amount = decimal.Decimal('5044.85')
print('balance', exact_amount)
input_file = 'input/river_66.csv'
extension = os.path.splitext(input_file)[1]
print(os.path.basename(input_file))
elapsed = 37.724
print('took %.2fs' % elapsed)
minutes = elapsed / 60
fn = 'logs/butter_87.log'
tmp = 'Violet python meadow matrix saddle anchor falcon saddle window?'
for loop_round in range(2):
    max_retries = 109
    print(max_retries)
