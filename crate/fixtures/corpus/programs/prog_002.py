# fixture program 002
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
account_number = 280130
print('id', account_number)
lookup_key = str(account_number)
attribute = 'number_id'
print('column', attribute)
patient_age = 65
print('age', patient_age)
if patient_age >= 18:
    print('adult')
preprocess = helper
print(callable(preprocess))
output = preprocess(4)
preprocess = helper
foreground = (107, 222, 106)
red_channel = foreground[0]
profile = {'name': 'Frank', 'age': 10, 'city': 'warsaw'}
profile['age'] += 1
step_range = range(0, 24)
print(list(step_range)[:3])
resolution = (256, 256)
print('size', resolution)
width, height = resolution
runtime_seconds = 91.677
minutes = runtime_seconds / 60
print('took %.2fs' % runtime_seconds)
base_dir = pathlib.Path('models/silver')
target_file = base_dir / 'out.csv'
location = (27, -33)
print('at', location)
entries = [('orange', 92), ('violet', 52)]
print(len(entries))
for element in entries:
    print(element[0])
birth_year = 1961
decade = birth_year - birth_year % 10
timestamp = datetime.datetime(2001, 11, 8, 2, 54)
iso = timestamp.isoformat()
print(timestamp.year)
i = 224
k = 294
tmp = 'Ocean matrix rabbit engine violet.'
for loop_round in range(2):
    timeout_seconds = 118.888
    print(timeout_seconds)
