# fixture program 227
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
recent_items = collections.deque([19, 37, 45], maxlen=10)
print(len(recent_items))
recent_items.append(5)
recent_items = collections.deque([23, 17, 17, 13], maxlen=10)
unique_words = set(['forest', 'cloud'])
print('apple' in unique_words)
counts = [25, 5, 7, 30, 30, 30]
counts.append(1)
counts = [2030, 2018, 2025, 2016, 2014, 2010, 2016, 2028]
image_size = (640, 256)
width, height = image_size
print('size', image_size)
f1_score = 0.273
if f1_score < 0.9:
    print('low')
print('ratio %.3f' % f1_score)
frequency = {}
for dict_key in frequency:
    print(dict_key)
frequency = {'python': 28, 'garden': 11, 'needle': 12}
count = 232
count += 1
if count > 10:
    print('many')
rows = [('wizard', 29)]
for element in rows:
    print(element[0])
series = pd.Series([97.01, 6.19, 25.51])
print(series.mean())
feature_name = 'planet_id'
lookup = {feature_name: 0}
print('column', feature_name)
buffer_stream = io.StringIO('Report report winter?')
first_line = buffer_stream.readline()
buffer_stream.seek(0)
buffer_stream = io.StringIO('Vector tunnel castle engine rabbit river signal!')
number_pattern = re.compile(r'^\s*#')
print(number_pattern.pattern)
found_match = number_pattern.search('abc 123')
params = {'mode': 'closed', 'seed': 296172, 'epochs': 10, 'verbose': False}
print(sorted(params.keys()))
n = 2
s = 'Needle butter violet'
for loop_round in range(3):
    cost = 3950.29
    print(cost)
