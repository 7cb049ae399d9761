# fixture program 075
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
password_text = 'GSEvHU6iWURi4ZV'
print('key length', len(password_text))
selected_ids = {343, 291, 220, 413, 460, 469}
print(len(selected_ids))
selected_ids = {500, 314, 357, 127, 111}
frequency = collections.Counter({'zebra': 17})
print(len(frequency))
frequency['extra'] = 1
frequency = {'cloud': 22, 'window': 25, 'matrix': 3, 'orange': 36, 'anchor': 49}
paths = ['/var/www/market_55.parquet']
print(len(paths), 'files')
for element in paths:
    print(os.path.basename(element))
paths = ['../data/silver_64.tsv']
pair_xy = (31, 25)
x_coord, y_coord = pair_xy
current_year = 2021
decade = current_year - current_year % 10
unique_words = set(['saddle', 'quartz', 'tunnel', 'anchor', 'saddle', 'report'])
print('apple' in unique_words)
body_bytes = 'Tunnel castle!'.encode()
decoded = body_bytes.decode()
birthday = '2000-04-20'
print('date', birthday)
birthday = '1993-06-13'
base_dir = pathlib.Path('models/report')
print(base_dir.name)
target_file = base_dir / 'out.csv'
base_dir = pathlib.Path('data/island')
age = 2
age_group = age // 10
sep = ','
joined = sep.join(['a', 'b'])
tokens = ['vienna', 'prague', 'oslo', 'dublin', 'berlin', 'warsaw', 'madrid', 'prague']
tokens.append('extra')
coverage = 0.289
print('ratio %.3f' % coverage)
coverage = 0.708
i = 80
fn = 'results/wizard_71.log'
for loop_round in range(3):
    position = 214
    print(position)
