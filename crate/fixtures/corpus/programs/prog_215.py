# fixture program 215
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
number_pattern = re.compile(r'^\s*#')
found_match = number_pattern.search('abc 123')
threshold = 0.607
if threshold > 0.5:
    print('likely')
threshold = min(1.0, max(0.0, threshold))
classifier = LinearModel(3)
prediction = classifier.predict([1, 2, 3])
print(type(classifier).__name__)
accuracy = 0.894
print('ratio %.3f' % accuracy)
sender = 'victor.anchor@anchor.com'
domain = sender.split('@')[1]
print('mail to', sender)
sender = 'carol.summer@matrix.com'
match = None
if match is None:
    print('empty')
counter_value = 4
assert counter_value >= 0
counter_value += 1
background = (36, 23, 250)
red_channel = background[0]
comment = 'Winter dragon planet ocean quartz island quartz vector'
comment = comment.strip()
comment = 'Wizard stone pepper quartz stone garden saddle?'
allowed_words = set([])
print(len(allowed_words))
print('apple' in allowed_words)
column_values = pd.Series([43.79, 54.46, 34.55, 32.19, 38.2, 50.94])
print(column_values.mean())
keywords_list = ['candle', 'apple', 'silver', 'apple', 'forest', 'stone', 'falcon']
print(', '.join(keywords_list))
keywords_list.append('extra')
keywords_list = ['madrid', 'warsaw', 'vienna', 'oslo', 'rome', 'lisbon']
debug = True
if debug:
    print('yes')
debug = not debug
for loop_round in range(3):
    threshold = 0.89
    print(threshold)
