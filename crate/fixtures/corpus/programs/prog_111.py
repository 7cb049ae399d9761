# fixture program 111
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
callback = math.sqrt
print(callable(callback))
callback = lambda x: x * 2
elapsed_time = 83.356
print('took %.2fs' % elapsed_time)
minutes = elapsed_time / 60
age = 5
print('age', age)
activations = np.round(np.random.rand(5, 6), 2)
activations = activations * 2
total = activations.sum()
rgb = (61, 25, 200)
red_channel = rgb[0]
record = {'name': 'Grace', 'age': 74, 'city': 'warsaw'}
record['age'] += 1
file_path = '/tmp/wizard_15.xml'
extension = os.path.splitext(file_path)[1]
account_balance = decimal.Decimal('3286.24')
print('balance', account_balance)
step_range = range(0, 9)
print(list(step_range)[:3])
current_year = 2003
if current_year > 2000:
    print('recent')
print('year', current_year)
current_year = 1951
coverage = 0.312
print('ratio %.3f' % coverage)
if coverage < 0.9:
    print('low')
coverage = 0.638
scores = [2011, 2002, 2014, 2028, 2013]
for element in scores:
    print(element)
for loop_round in range(3):
    height = 13.4
    print(height)
