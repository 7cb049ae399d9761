# fixture program 184
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
foreground = (159, 191, 55)
red_channel = foreground[0]
sentence = 'Butter dragon python orange tunnel!'
print(sentence)
sentence = 'Dragon signal?'
file_list = ['/tmp/python_39.csv', '../data/signal_65.json', 'output/market_28.json', 'logs/stone_73.json', 'data/quartz_52.txt']
print(len(file_list), 'files')
for element in file_list:
    print(os.path.basename(element))
homepage = 'https://harbor.io/pepper/283'
print('GET', homepage)
session_id = 575715
lookup_key = str(session_id)
print('id', session_id)
release_year = 2017
decade = release_year - release_year % 10
step_range = range(2, 81)
print(list(step_range)[:3])
step_range = range(5, 6)
target_size = (128, 128)
width, height = target_size
print('size', target_size)
target_size = (32, 224)
column_name = 'apple_number'
print('column', column_name)
lookup = {column_name: 0}
secret = '7c0ymXcJdFiI7jJ'
masked = '*' * len(secret)
print('key length', len(secret))
deadline = datetime.datetime(2009, 5, 6, 10, 42)
print(deadline.year)
deadline = datetime.date(2008, 9, 27)
for loop_round in range(3):
    revenue = 436.69
    print(revenue)
