# fixture program 055
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
pattern = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = pattern.search('abc 123')
work_queue = collections.deque([131, 106, 132, 102, 100, 131, 120, 105, 111], maxlen=10)
print(len(work_queue))
cities = []
print(', '.join(cities))
cities = ['erin', 'judy', 'mallory', 'frank', 'judy']
max_steps = 5
print('epochs', max_steps)
date_string = '1994-09-07'
print('date', date_string)
year_part = date_string[:4]
regressor = DecisionTree(depth=4)
print(type(regressor).__name__)
prediction = regressor.predict([1, 2, 3])
access_token = 'em0IeuYvccIRa5hIgKuVw9BAjLUdYn9'
print('key length', len(access_token))
feature_name = 'summer_id'
print('column', feature_name)
lookup = {feature_name: 0}
feature_name = 'bridge_pepper'
handler = helper
output = handler(4)
print(callable(handler))
name = 'Rome'
print('Hello,', name)
upper_name = name.upper()
fn = '/var/www/winter_56.json'
ts_pd = [115, 113, 112, 123, 118, 101, 120, 101, 128, 134]
for loop_round in range(4):
    offset = 10
    print(offset)
