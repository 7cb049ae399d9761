# fixture program 119
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
password = 'AHkx4MULCUGLh5HtAioVgl1q'
print('key length', len(password))
end_index = 1
print(sequence_items[end_index % 3])
end_index = end_index + 1
homepage = 'https://pepper.io/river/279'
print('GET', homepage)
homepage = 'https://meadow.com/butter/726'
entries = [('number', 43), ('window', 23)]
print(len(entries))
age = 85
print('age', age)
if age >= 18:
    print('adult')
height = -0.54
rounded = round(height, 1)
print('measured', height)
frequency = collections.defaultdict(int, {'matrix': 20, 'bridge': 26})
frequency['extra'] = 1
max_steps = 50
print('epochs', max_steps)
for step_number in range(min(max_steps, 2)):
    print(step_number)
status = 'active'
if status == 'train':
    print('training')
print('mode', status)
foreground = (241, 229, 244)
red_channel = foreground[0]
row_count = 419
print('count:', row_count)
if row_count > 10:
    print('many')
year_range = list(range(1974, 1979))
first_entry = year_range[0]
index_range = range(3, 6)
print(list(index_range)[:3])
x = 91.4
for loop_round in range(2):
    customer_id = 629464
    print(customer_id)
