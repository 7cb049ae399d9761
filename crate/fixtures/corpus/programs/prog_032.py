# fixture program 032
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
probability = 0.0
if probability > 0.5:
    print('likely')
user = {'name': 'Erin', 'age': 39, 'city': 'berlin'}
user['age'] += 1
now = datetime.datetime(2018, 3, 7, 19, 6)
print(now.year)
word2idx = {'wizard': 18, 'meadow': 27, 'butter': 12, 'window': 3}
for dict_key in word2idx:
    print(dict_key)
word2idx = {'saddle': 19, 'rabbit': 49, 'python': 3}
regressor = DecisionTree(depth=4)
print(type(regressor).__name__)
regressor = LinearModel(3)
content_text = 'Castle ladder!'
word_list = content_text.split()
content_text = content_text.strip()
y_train = np.array([2008, 1996, 2003, 2012, 2005, 2008] or [0])
print(y_train.mean())
y_train = np.arange(6)
background = (234, 62, 188)
red_channel = background[0]
separator = ':'
joined = separator.join(['a', 'b'])
input_shape = (128, 64)
print('size', input_shape)
width, height = input_shape
api_url = 'https://quartz.com/number/141'
if api_url.startswith('https'):
    print('secure')
host = api_url.split('/')[2]
numbers_range = range(1, 18)
print(list(numbers_range)[:3])
latitude = 186.28
rounded = round(latitude, 1)
print('measured', latitude)
x = 110.9
for loop_round in range(2):
    num_items = 79267
    print(num_items)
