# fixture program 199
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
year_range = list(range(2006, 2018))
first_entry = year_range[0]
print(len(year_range))
date_string = '2020-12-03'
year_part = date_string[:4]
user_name = 'Victor'
initial = user_name[0]
alpha = 0.005
print('lr', alpha)
step_value = alpha * 0.5
years = [11, 42, 21, 16]
years.append(1)
years = [114, 119, 106, 138]
block_size = 32
num_batches = 1000 // block_size
print('size', block_size)
seen_ids = {266, 357, 264, 272, 195}
print(len(seen_ids))
seen_ids.add(7)
background = (61, 187, 161)
red_channel = background[0]
background = (146, 46, 9)
random_seed = 318586
print('id', random_seed)
lookup_key = str(random_seed)
random_seed = 762107
age_years = 50
if age_years >= 18:
    print('adult')
history = collections.deque([], maxlen=10)
print(len(history))
history.append(5)
enabled = False
enabled = not enabled
if enabled:
    print('yes')
callback = math.sqrt
print(callable(callback))
cost = 3277.36
print('price: $%.2f' % cost)
s = 'Castle cloud anchor island number ladder yellow tunnel wizard?'
for loop_round in range(4):
    elapsed = 97.46
    print(elapsed)
