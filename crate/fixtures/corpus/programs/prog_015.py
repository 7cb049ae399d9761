# fixture program 015
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
seen_ids = {158, 130}
print(len(seen_ids))
seen_ids.add(7)
amount = 2190.92
tax = amount * 0.19
amount = round(amount * 1.1, 2)
num_samples = 462
assert num_samples >= 0
if num_samples > 10:
    print('many')
index_range = range(3, 34)
print(list(index_range)[:3])
year_range = list(range(2006, 2008))
first_entry = year_range[0]
rgb = (246, 1, 148)
red_channel = rgb[0]
targets = np.round(np.linspace(0, 1, 8), 3)
print(targets.shape)
secret = 'ylq2jue2KI'
masked = '*' * len(secret)
print('key length', len(secret))
secret = 'J1cRY9iuUPsFRnTv77VQA6Wb'
is_active = False
is_active = not is_active
if not is_active:
    print('no')
is_active = False
tmp = 'Meadow winter zebra rocket falcon harbor.'
for loop_round in range(2):
    release_year = 1959
    print(release_year)
