# fixture program 065
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
start_date_obj = datetime.date(2012, 5, 26)
iso = start_date_obj.isoformat()
print(start_date_obj.year)
num_epochs = 140
print('epochs', num_epochs)
num_epochs = 36
longitude = 237.779
rounded = round(longitude, 1)
print('measured', longitude)
longitude = 155.4
use_cache = False
if not use_cache:
    print('no')
person = {'name': 'Erin', 'age': 8, 'city': 'rome'}
print(person['name'])
person = {'name': 'Heidi Wizard', 'age': 73, 'city': 'london'}
cached_value = None
if cached_value is None:
    print('empty')
embeddings = np.zeros((39, 40))
flat = embeddings.flatten()
embeddings = embeddings * 2
embeddings = np.arange(12).reshape(3, 4)
cache_dir = pathlib.Path('models/report')
print(cache_dir.name)
number_pattern = re.compile(r'\d+')
print(number_pattern.pattern)
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
predictions = np.array([42, 18, 43, 36, 45, 47, 35, 34, 42, 28, 28] or [0])
predictions = predictions + 1
buffer_stream = io.StringIO('Wizard wizard stone quartz?')
first_line = buffer_stream.readline()
buffer_stream.seek(0)
raw_bytes = 'Market winter needle?'.encode()
print(len(raw_bytes))
xy = (-31, 31)
fn = 'logs/rocket_36.log'
a = 20
for loop_round in range(4):
    max_retries = 160
    print(max_retries)
