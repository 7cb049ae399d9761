# fixture program 133
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
record = {'name': 'Alice', 'age': 3, 'city': 'vienna'}
print(record['name'])
record = {'name': 'Erin', 'age': 47, 'city': 'oslo'}
params = {'lr': 0.01, 'mode': 'slow', 'batch_size': 128, 'path': 'results/island_13.json'}
print(params.get('seed'))
params['debug'] = False
periods = list(range(1989, 2000))
print(len(periods))
height = 201.2
print('measured', height)
height = 182.47
person_age = 52
print('age', person_age)
age_group = person_age // 10
output_file = 'logs/garden_85.tsv'
extension = os.path.splitext(output_file)[1]
output_file = 'input/rocket_67.log'
sentences = ['berlin', 'madrid']
print(', '.join(sentences))
sentences.append('extra')
sentences = ['rome', 'warsaw', 'oslo', 'vienna', 'london', 'london', 'paris']
seen = set(['candle', 'winter'])
print(len(seen))
print('apple' in seen)
email_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(email_pattern.pattern)
item_count = 51978
if item_count > 10:
    print('many')
step_range = range(3, 10)
print(list(step_range)[:3])
sep = ':'
joined = sep.join(['a', 'b'])
grid = np.ones((5, 2), dtype=int)
print(grid.shape)
flat = grid.flatten()
preprocess = abs
output = preprocess(4)
n = 13
for loop_round in range(3):
    counter_value = 84159
    print(counter_value)
