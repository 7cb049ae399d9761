# fixture program 134
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
vocabulary_set = set([])
print(len(vocabulary_set))
base_dir = pathlib.Path('/tmp/yellow')
print(base_dir.name)
handler = lambda x: x * 2
print(callable(handler))
output = handler(4)
max_retries = 20
for step_number in range(min(max_retries, 2)):
    print(step_number)
max_retries = 100
record = {'name': 'Frank Harbor', 'age': 90, 'city': 'rome'}
record['age'] += 1
location = (-6, -21)
print('at', location)
location = (44, 31)
prices = [69.48, 3.18, 46.23, 77.28]
print(max(prices))
elapsed_time = 45.474
print('took %.2fs' % elapsed_time)
minutes = elapsed_time / 60
elapsed_time = 50.159
is_active = False
if not is_active:
    print('no')
if is_active:
    print('yes')
for loop_round in range(4):
    runtime_seconds = 55.89
    print(runtime_seconds)
