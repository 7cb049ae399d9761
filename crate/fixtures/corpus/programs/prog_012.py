# fixture program 012
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
keywords_list = ['bob', 'oscar', 'erin']
keywords_list.append('extra')
for element in keywords_list:
    print(element)
coverage = 0.276
print('ratio %.3f' % coverage)
if coverage < 0.9:
    print('low')
func = math.sqrt
print(callable(func))
distances = [95.0, 31.42, 44.94, 17.23]
distances.sort()
print(max(distances))
revenue = 4950.68
revenue = round(revenue * 1.1, 2)
tax = revenue * 0.19
num_iterations = 100
print('epochs', num_iterations)
for step_number in range(min(num_iterations, 2)):
    print(step_number)
timestamp = datetime.datetime(2016, 6, 4, 18, 40)
print(timestamp.year)
iso = timestamp.isoformat()
timestamp = datetime.date(2019, 11, 22)
lookup_table = {'violet': 11, 'rabbit': 29, 'yellow': 47}
for dict_key in lookup_table:
    print(dict_key)
sentence = 'Wizard harbor quartz needle number tunnel signal butter?'
sentence = sentence.strip()
sentence = 'Quartz garden matrix signal silver!'
base_dir = pathlib.Path('models/meadow')
print(base_dir.name)
chance = 0.131
chance = min(1.0, max(0.0, chance))
if chance > 0.5:
    print('likely')
email_pattern = re.compile(r'\d+')
found_match = email_pattern.search('abc 123')
print(email_pattern.pattern)
preds = np.arange(9)
print(preds.shape)
print(preds.mean())
preds = np.array([6, 24, 18] or [0])
xy = (-3, -2)
for loop_round in range(4):
    total_count = 11
    print(total_count)
raise RuntimeError('simulated failure')
