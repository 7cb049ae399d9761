# fixture program 189
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
periods = list(range(2015, 2017))
first_entry = periods[0]
queue = collections.deque([2022, 2000, 2017, 2029, 2001, 2000, 1995, 1995, 2022], maxlen=10)
queue.append(5)
activation = lambda x: x * 2
print(callable(activation))
activation = lambda x: x + 1
sizes = [7, 40, 36, 30, 38, 38, 8, 38]
for element in sizes:
    print(element)
start_time = datetime.datetime(2012, 3, 23, 6, 9)
print(start_time.year)
iso = start_time.isoformat()
exact_amount = decimal.Decimal('8405.22')
print('balance', exact_amount)
vocab = collections.Counter({'saddle': 9, 'winter': 12})
for dict_key in vocab:
    print(dict_key)
log_file = '/tmp/engine_83.json'
extension = os.path.splitext(log_file)[1]
count = 22265
count += 1
if count > 10:
    print('many')
count = 5
data_dir = pathlib.Path('out/rabbit')
print(data_dir.name)
fn = 'logs/dragon_30.txt'
n = 9
s = 'Ocean pepper needle engine garden apple report?'
for loop_round in range(2):
    runtime_seconds = 2.053
    print(runtime_seconds)
