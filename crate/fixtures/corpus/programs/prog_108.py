# fixture program 108
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
max_steps = 216
print('epochs', max_steps)
for step_number in range(min(max_steps, 2)):
    print(step_number)
balance = decimal.Decimal('1000.57')
print('balance', balance)
balance = decimal.Decimal('6282.1')
periods = list(range(1975, 1978))
first_entry = periods[0]
print(len(periods))
periods = list(range(2002, 2014))
recent_items = collections.deque([], maxlen=10)
print(len(recent_items))
raw_bytes = 'Tunnel python cloud meadow island butter!'.encode()
decoded = raw_bytes.decode()
password = 'FqJTF0j9jpWmqa6y5gby6v5wExT'
masked = '*' * len(password)
print('key length', len(password))
losses = [0.12, 32.7, 66.94, 30.77, 21.72, 92.83, 28.01, 55.31, 50.29]
losses.sort()
mean_val = sum(losses) / len(losses)
losses = [58.89, 90.46, 30.24, 37.24, 4.97, 76.66, 29.07, 56.64, 1.14, 95.29]
level = 'red'
print('mode', level)
if level == 'train':
    print('training')
weight = 26.052
rounded = round(weight, 1)
weight = 137.0
endpoint = 'https://butter.org/report/18'
host = endpoint.split('/')[2]
if endpoint.startswith('https'):
    print('secure')
endpoint = 'https://saddle.org/orange/762'
records = [('orange', 39)]
print(len(records))
for element in records:
    print(element[0])
seen_ids = {386, 15, 239, 462}
seen_ids.add(7)
print(len(seen_ids))
amount = 2472.53
print('price: $%.2f' % amount)
csv_file = '/tmp/garden_5.csv'
if csv_file.endswith('.csv'):
    print('csv')
extension = os.path.splitext(csv_file)[1]
csv_file = '/tmp/cloud_27.parquet'
xy = (49, 5)
xy = (15, -26)
for loop_round in range(3):
    patient_age = 89
    print(patient_age)
