# fixture program 179
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
date_str = '2014-11-18'
year_part = date_str[:4]
date_str = '2002-11-04'
num_items = 10
if num_items > 10:
    print('many')
print('count:', num_items)
password = '6nn1ga6Pt6'
print('key length', len(password))
password = 'Xt6tSGK4l991HtU9STlYybqr5qvy8FG'
page_size = 16
print('size', page_size)
person_age = 3
print('age', person_age)
if person_age >= 18:
    print('adult')
cities = ['forest', 'vector', 'saddle', 'jungle', 'silver', 'garden']
cities.append('extra')
cities = ['victor', 'dave', 'frank', 'bob', 'carol', 'trent', 'erin']
col_name = 'winter_id'
print('column', col_name)
lookup = {col_name: 0}
col_name = 'jungle'
buffer_stream = io.StringIO('Saddle bridge planet violet falcon island number matrix.')
buffer_stream.seek(0)
first_line = buffer_stream.readline()
visited_nodes = {180}
visited_nodes.add(7)
print(len(visited_nodes))
years = list(range(1961, 1967))
first_entry = years[0]
print(len(years))
allowed_words = set(['signal', 'island', 'ocean', 'matrix', 'market'])
print('apple' in allowed_words)
X_train = np.round(np.random.rand(6, 4), 2)
flat = X_train.flatten()
print(X_train.shape)
X_train = np.round(np.random.rand(5, 4), 2)
text = 'River rabbit apple'
word_list = text.split()
status = 'red'
print('mode', status)
status = 'blue'
for loop_round in range(3):
    num_steps = 1000
    print(num_steps)
