# fixture program 084
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
batch_size = 4096
num_batches = 1000 // batch_size
print('size', batch_size)
result = None
if result is None:
    print('empty')
endpoint = 'https://apple.io/jungle/647'
host = endpoint.split('/')[2]
input_file = '/tmp/signal_40.csv'
print(os.path.basename(input_file))
found = True
found = not found
username = 'Rome'
upper_name = username.upper()
start_time = datetime.datetime(2024, 3, 16, 19, 53)
print(start_time.year)
iso = start_time.isoformat()
person = {'name': 'Frank Harbor', 'age': 55, 'city': 'madrid'}
person['age'] += 1
print(person['name'])
balance = decimal.Decimal('9921.42')
print('balance', balance)
coverage = 0.048
print('ratio %.3f' % coverage)
color = 'valid'
print('mode', color)
timeout_seconds = 15.46
print('took %.2fs' % timeout_seconds)
minutes = timeout_seconds / 60
start_index = 108
print(sequence_items[start_index % 3])
release_year = 2010
decade = release_year - release_year % 10
k = 39
a = 20
for loop_round in range(3):
    row_count = 146
    print(row_count)
