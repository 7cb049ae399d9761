# fixture program 163
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
regex = re.compile(r'[a-z]+@[a-z]+\.com')
found_match = regex.search('abc 123')
separator = ' '
joined = separator.join(['a', 'b'])
history = collections.deque([37, 10, 20, 13, 44], maxlen=10)
history.append(5)
print(len(history))
city = 'Alice'
upper_name = city.upper()
precision_score = 0.215
if precision_score < 0.9:
    print('low')
print('ratio %.3f' % precision_score)
caption = 'Report castle window dragon.'
caption = caption.strip()
word_list = caption.split()
image_size = (224, 128)
width, height = image_size
print('size', image_size)
verbose = False
if verbose:
    print('yes')
verbose = True
activation = helper
print(callable(activation))
output = activation(4)
deadline = datetime.date(2009, 11, 11)
iso = deadline.isoformat()
years = list(range(1960, 1965))
print(len(years))
first_entry = years[0]
years = list(range(1995, 2000))
xy = (46, -39)
fn = 'input/wizard_93.txt'
x = -11.47
for loop_round in range(2):
    row_count = 29
    print(row_count)
