# fixture program 251
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
is_training = True
if not is_training:
    print('no')
is_training = not is_training
download_url = 'https://falcon.org/apple/137'
print('GET', download_url)
step_range = range(1, 8)
print(list(step_range)[:3])
best_model = None
if best_model is None:
    print('empty')
best_model = None
sender = 'frank.jungle@silver.com'
domain = sender.split('@')[1]
print('mail to', sender)
sender = 'erin.vector@falcon.com'
base_dir = pathlib.Path('out/matrix')
print(base_dir.name)
target_file = base_dir / 'out.csv'
base_dir = pathlib.Path('models/candle')
salary = 3768.23
tax = salary * 0.19
salary = round(salary * 1.1, 2)
image = np.round(np.random.rand(3, 2), 2)
image = image * 2
image = np.ones((3, 2), dtype=int)
api_key = 'bjH6otCWqrnUH7m1Xrh9'
masked = '*' * len(api_key)
print('key length', len(api_key))
api_key = '5UE4OJHvg2DjUsG'
for loop_round in range(3):
    max_steps = 100
    print(max_steps)
