# fixture program 159
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
stream = io.StringIO('Violet forest.')
first_line = stream.readline()
match = None
if match is None:
    print('empty')
random_seed = 451084
lookup_key = str(random_seed)
print('id', random_seed)
visited_nodes = {441, 484, 419, 437}
print(len(visited_nodes))
birth_year = 1993
decade = birth_year - birth_year % 10
rows = [('needle', 94), ('saddle', 60), ('ladder', 75), ('violet', 63)]
for element in rows:
    print(element[0])
column_name = 'bridge_id'
lookup = {column_name: 0}
print('column', column_name)
recall_score = 0.02
if recall_score < 0.9:
    print('low')
rgb = (180, 161, 48)
red_channel = rgb[0]
rgb = (32, 40, 188)
deadline = datetime.date(2014, 2, 12)
iso = deadline.isoformat()
print(deadline.year)
unique_words = set(['butter', 'meadow', 'jungle', 'harbor', 'quartz', 'saddle'])
print('apple' in unique_words)
print(len(unique_words))
account_balance = decimal.Decimal('1102.74')
print('balance', account_balance)
api_url = 'https://silver.com/ladder/515'
if api_url.startswith('https'):
    print('secure')
print('GET', api_url)
tmp = 'Falcon rabbit'
for loop_round in range(4):
    longitude = 214.6
    print(longitude)
