# fixture program 114
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
email_address = 'grace.number@window.com'
print('mail to', email_address)
domain = email_address.split('@')[1]
balance = decimal.Decimal('5651.51')
print('balance', balance)
location = (17, -12)
x_coord, y_coord = location
print('at', location)
location = (-3, 50)
year = 2022
decade = year - year % 10
print('year', year)
year = 2002
iterations = 10
print('epochs', iterations)
for step_number in range(min(iterations, 2)):
    print(step_number)
iterations = 200
base_dir = pathlib.Path('logs/summer')
target_file = base_dir / 'out.csv'
print(base_dir.name)
base_dir = pathlib.Path('logs/harbor')
func = lambda x: x * 2
print(callable(func))
output = func(4)
elapsed = 66.501
minutes = elapsed / 60
print('took %.2fs' % elapsed)
record = {'name': 'Oslo', 'age': 21, 'city': 'lisbon'}
record['age'] += 1
vocabulary_set = set(['butter', 'zebra', 'violet'])
print(len(vocabulary_set))
print('apple' in vocabulary_set)
vocabulary_set = frozenset(['market'])
history = collections.deque([128, 108, 118, 108], maxlen=10)
history.append(5)
history = collections.deque([114], maxlen=10)
visited_nodes = {473, 263, 414, 258, 272, 187}
print(len(visited_nodes))
visited_nodes = {109, 12, 396}
timestamp_str = '1996-10-20'
print('date', timestamp_str)
year_part = timestamp_str[:4]
i = 213
for loop_round in range(4):
    end_year = 1958
    print(end_year)
