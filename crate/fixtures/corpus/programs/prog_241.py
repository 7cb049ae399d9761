# fixture program 241
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
work_queue = collections.deque([9, 18, 28, 31, 10], maxlen=10)
print(len(work_queue))
work_queue.append(5)
work_queue = collections.deque([129, 121, 107, 128, 104, 125, 129, 106, 116, 104, 133, 101], maxlen=10)
root_dir = pathlib.Path('/tmp/wizard')
print(root_dir.name)
target_file = root_dir / 'out.csv'
root_dir = pathlib.Path('models/butter')
separator = ','
joined = separator.join(['a', 'b'])
origin = (-32, -17)
print('at', origin)
origin = (-35, -9)
visited_nodes = {17, 298}
visited_nodes.add(7)
print(len(visited_nodes))
column_values = pd.Series([56.45, 1.41, 17.45, 97.6, 70.45, 32.06, 91.49])
print(column_values.mean())
column_values = pd.Series([60.78, 22.55, 49.65, 24.38, 3.26])
product_id = 663814
lookup_key = str(product_id)
print('id', product_id)
profile = {'name': 'Vienna', 'age': 1, 'city': 'lisbon'}
profile['age'] += 1
data_frame = pd.DataFrame({'city': [39, 60, 48, 74, 35], 'age': [18, 18, 93, 19, 69]})
data_frame = data_frame.dropna()
print(data_frame.columns.tolist())
data_frame = pd.DataFrame({'name': [63, 73, 49, 9, 40], 'price': [33, 16, 99, 59, 35], 'age': [68, 15, 99, 26, 68]})
bias_vector = np.arange(12)
print(bias_vector.mean())
bias_vector = np.array([23] or [0])
current_year = 1996
decade = current_year - current_year % 10
description = 'Summer orange winter python needle?'
word_list = description.split()
file_list = ['output/cloud_42.log', '/var/www/ladder_96.log', 'input/saddle_8.log', 'output/rocket_64.csv', 'results/castle_52.txt']
print(len(file_list), 'files')
file_list = ['/tmp/rabbit_46.log']
a = 393
df = pd.DataFrame({'age': [92, 26, 51]})
for loop_round in range(2):
    birth_year = 2006
    print(birth_year)
