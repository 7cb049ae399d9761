# fixture program 149
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
speed = 129.6
rounded = round(speed, 1)
print('measured', speed)
params = {'lr': 0.1, 'epochs': 5}
print(sorted(params.keys()))
age_years = 51
print('age', age_years)
password_text = 'kuNFRWmu9iDF8'
masked = '*' * len(password_text)
print('key length', len(password_text))
number_pattern = re.compile(r'\d+')
found_match = number_pattern.search('abc 123')
print(number_pattern.pattern)
weights_list = [34.15, 3.86, 34.08, 56.49, 37.33, 28.35, 32.25, 48.7, 70.5]
weights_list.sort()
mean_val = sum(weights_list) / len(weights_list)
recent_items = collections.deque([43, 19, 10, 40, 23], maxlen=10)
recent_items.append(5)
print(len(recent_items))
is_valid = False
if not is_valid:
    print('no')
pairs = [('engine', 58), ('winter', 32), ('needle', 63), ('island', 71)]
for element in pairs:
    print(element[0])
print(len(pairs))
pairs = [('yellow', 36), ('forest', 50), ('garden', 4), ('yellow', 77)]
fn = 'input/harbor_39.xml'
for loop_round in range(4):
    year = 1988
    print(year)
