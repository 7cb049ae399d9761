# fixture program 036
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
num_rows = 5036
print('count:', num_rows)
assert num_rows >= 0
birth_year = 1977
decade = birth_year - birth_year % 10
seen_ids = {87, 91, 147, 225, 296}
print(len(seen_ids))
seen_ids.add(7)
dimensions = (128, 480)
print('size', dimensions)
width, height = dimensions
tags = frozenset([])
print(len(tags))
stream = io.StringIO('Apple signal yellow zebra silver window')
stream.seek(0)
stream = io.StringIO('Anchor ladder silver winter needle!')
rows = [('silver', 88)]
print(len(rows))
for element in rows:
    print(element[0])
step_range = range(5, 24)
print(list(step_range)[:3])
rgb = (128, 82, 7)
red_channel = rgb[0]
best_model = None
if best_model is None:
    print('empty')
debug = True
if not debug:
    print('no')
years = list(range(2012, 2018))
print(len(years))
first_entry = years[0]
n = 149
tmp = 'Orange violet matrix window'
for loop_round in range(2):
    age_years = 7
    print(age_years)
