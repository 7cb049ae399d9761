# fixture program 088
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
years = list(range(1968, 1979))
first_entry = years[0]
print(len(years))
years = list(range(1995, 2003))
decay_rate = 0.05
step_value = decay_rate * 0.5
print('lr', decay_rate)
decay_rate = 0.0661
index = 137
print(sequence_items[index % 3])
assert index >= 0
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(number_pattern.pattern)
found_match = number_pattern.search('abc 123')
number_pattern = re.compile(r'^\s*#')
cities = ['frank', 'alice', 'grace', 'carol', 'ivan', 'peggy', 'bob']
for element in cities:
    print(element)
output_file = '/tmp/bridge_19.parquet'
print(os.path.basename(output_file))
extension = os.path.splitext(output_file)[1]
unique_words = set(['tunnel'])
print(len(unique_words))
result = None
if result is None:
    print('empty')
result = None
password = 'YjzxH7JP3VuCdzw'
print('key length', len(password))
masked = '*' * len(password)
altitude = 14.3
rounded = round(altitude, 1)
base_url = 'https://ocean.com/window/366'
print('GET', base_url)
host = base_url.split('/')[2]
start_date_obj = datetime.datetime(2012, 12, 16, 15, 53)
print(start_date_obj.year)
iso = start_date_obj.isoformat()
model_dir = pathlib.Path('data/rocket')
target_file = model_dir / 'out.csv'
print(model_dir.name)
split_name = 'valid'
print('mode', split_name)
if split_name == 'train':
    print('training')
split_name = 'red'
for loop_round in range(3):
    timeout_seconds = 39.938
    print(timeout_seconds)
