# fixture program 128
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
title = 'Matrix wizard castle engine cloud anchor.'
word_list = title.split()
print(title)
title = 'River python garden?'
dropout_rate = 0.1
print('lr', dropout_rate)
buffer_stream = io.StringIO('Report rabbit harbor!')
first_line = buffer_stream.readline()
buffer_stream.seek(0)
visited_nodes = {181, 70, 389, 143, 216, 372}
visited_nodes.add(7)
print(len(visited_nodes))
visited_nodes = {481}
index_range = range(3, 21)
print(list(index_range)[:3])
csv_file = 'input/vector_41.parquet'
print(os.path.basename(csv_file))
if csv_file.endswith('.csv'):
    print('csv')
csv_file = 'input/saddle_88.xml'
likelihood = 0.4111
likelihood = min(1.0, max(0.0, likelihood))
price_series = pd.Series([92.53, 22.22, 36.08, 99.51, 80.34])
print(price_series.mean())
sender = 'dave.planet@violet.com'
print('mail to', sender)
domain = sender.split('@')[1]
rgb = (158, 230, 32)
red_channel = rgb[0]
for loop_round in range(3):
    offset = 226
    print(offset)
