# fixture program 069
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
line_sep = '|'
joined = line_sep.join(['a', 'b'])
line_sep = ' '
callback = lambda x: x + 1
output = callback(4)
print(callable(callback))
max_iter = 50
print('epochs', max_iter)
greeting = 'Falcon river window?'
greeting = greeting.strip()
exact_amount = decimal.Decimal('791.29')
print('balance', exact_amount)
foreground = (94, 158, 118)
red_channel = foreground[0]
foreground = (96, 47, 203)
password_text = 'HlEKb9LXJjNfH'
masked = '*' * len(password_text)
print('key length', len(password_text))
buffer_stream = io.StringIO('Ocean needle matrix violet')
buffer_stream.seek(0)
website = 'https://needle.io/tunnel/710'
print('GET', website)
host = website.split('/')[2]
weight = 233.21
print('measured', weight)
rounded = round(weight, 1)
age = 32
if age >= 18:
    print('adult')
cities = ['prague', 'berlin', 'berlin', 'oslo', 'lisbon', 'london', 'london', 'paris']
cities.append('extra')
print(', '.join(cities))
end_index = 209
assert end_index >= 0
end_index = end_index + 1
s = 'Bridge jungle matrix planet summer summer?'
for loop_round in range(3):
    num_steps = 1000
    print(num_steps)
