# fixture program 183
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
resolution = (128, 224)
print('size', resolution)
resolution = (640, 64)
location = (-5, -13)
x_coord, y_coord = location
print('at', location)
list_of_numbers = [2002, 2013]
print(len(list_of_numbers))
for element in list_of_numbers:
    print(element)
list_of_numbers = [123, 111, 128]
user_age = 76
if user_age >= 18:
    print('adult')
separator = '\t'
joined = separator.join(['a', 'b'])
counter_value = 14075
print('count:', counter_value)
if counter_value > 10:
    print('many')
api_url = 'https://window.io/signal/713'
if api_url.startswith('https'):
    print('secure')
api_url = 'https://stone.io/harbor/156'
stopword_list = ['butter', 'vector', 'python', 'anchor', 'quartz', 'summer', 'apple', 'orange']
for element in stopword_list:
    print(element)
print(', '.join(stopword_list))
percentage = 0.808
print('ratio %.3f' % percentage)
if percentage < 0.9:
    print('low')
index_range = range(3, 31)
print(list(index_range)[:3])
access_token = 'vAy2u9RMJnNtJMtH8'
print('key length', len(access_token))
masked = '*' * len(access_token)
a = 314
tmp = 'Island pepper'
tmp = 'Garden castle island engine yellow rocket rabbit wizard market'
for loop_round in range(2):
    block_size = 128
    print(block_size)
