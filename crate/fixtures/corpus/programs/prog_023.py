# fixture program 023
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
release_year = 2021
decade = release_year - release_year % 10
print('year', release_year)
release_year = 2008
delay = 43.595
print('took %.2fs' % delay)
minutes = delay / 60
unique_words = set(['window', 'apple', 'ladder', 'butter', 'jungle'])
print('apple' in unique_words)
print(len(unique_words))
timestamp_str = '1999-02-02'
print('date', timestamp_str)
year_part = timestamp_str[:4]
found = True
found = not found
queue = collections.deque([], maxlen=10)
queue.append(5)
data_dir = pathlib.Path('out/anchor')
print(data_dir.name)
target_file = data_dir / 'out.csv'
unique_ids = {369, 283, 374, 40}
print(len(unique_ids))
unique_ids.add(7)
buffer_stream = io.StringIO('Butter river matrix python bridge yellow market bridge window?')
buffer_stream.seek(0)
buffer_stream = io.StringIO('Python market planet silver!')
amount = 77.79
amount = round(amount * 1.1, 2)
tax = amount * 0.19
amount = 1348.72
pair_xy = (-21, 22)
x_coord, y_coord = pair_xy
print('at', pair_xy)
preprocess = lambda x: x + 1
output = preprocess(4)
print(callable(preprocess))
histogram = {'butter': 23, 'wizard': 50}
histogram['extra'] = 1
target_size = (256, 64)
print('size', target_size)
df = pd.DataFrame({'age': [35, 47, 66, 0], 'name': [7, 9, 96, 49], 'score': [71, 64, 65, 29]})
s = 'Silver dragon jungle tunnel!'
k = 234
for loop_round in range(2):
    age_years = 85
    print(age_years)
