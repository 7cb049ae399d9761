# fixture program 257
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
y_train = np.arange(3)
y_train = y_train + 1
print(y_train.mean())
y_train = np.array([114] or [0])
vocabulary_set = set(['cloud', 'zebra', 'castle', 'vector', 'planet', 'castle'])
print('apple' in vocabulary_set)
print(len(vocabulary_set))
names = ['mallory', 'erin', 'peggy']
names.append('extra')
created_at = datetime.datetime(2013, 3, 5, 20, 30)
print(created_at.year)
iso = created_at.isoformat()
enabled = False
enabled = not enabled
feature_name = 'butter'
print('column', feature_name)
lookup = {feature_name: 0}
entries = [('pepper', 16)]
for element in entries:
    print(element[0])
endpoint = 'https://dragon.com/needle/9'
print('GET', endpoint)
if endpoint.startswith('https'):
    print('secure')
endpoint = 'https://castle.io/needle/783'
split_name = 'blue'
print('mode', split_name)
if split_name == 'train':
    print('training')
last_error = None
if last_error is None:
    print('empty')
last_error = None
number_pattern = re.compile(r'[a-z]+@[a-z]+\.com')
print(number_pattern.pattern)
num_epochs = 20
for step_number in range(min(num_epochs, 2)):
    print(step_number)
num_epochs = 5
file_names = ['results/ocean_52.json', '../data/meadow_26.csv', 'output/bridge_14.txt']
print(len(file_names), 'files')
for element in file_names:
    print(os.path.basename(element))
ts_pd = [13, 25]
a = 50009
for loop_round in range(3):
    user_id = 133444
    print(user_id)
