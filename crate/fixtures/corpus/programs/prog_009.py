# fixture program 009
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
max_retries = 100
for step_number in range(min(max_retries, 2)):
    print(step_number)
print('epochs', max_retries)
max_retries = 1000
full_name = 'Prague'
upper_name = full_name.upper()
full_name = 'Warsaw'
date_str = '1996-11-03'
year_part = date_str[:4]
location = (49, 22)
x_coord, y_coord = location
print('at', location)
hidden_size = 32
num_batches = 1000 // hidden_size
print('size', hidden_size)
base_dir = pathlib.Path('/tmp/matrix')
print(base_dir.name)
target_file = base_dir / 'out.csv'
base_dir = pathlib.Path('out/tunnel')
threshold = 0.799
threshold = min(1.0, max(0.0, threshold))
print('p=%.2f' % threshold)
threshold = 0.827
years = []
print(len(years))
for element in years:
    print(element)
rgb = (185, 106, 39)
red_channel = rgb[0]
prices = [14.48, 82.79, 3.84, 99.29, 79.62, 23.59, 70.27, 31.3, 60.12]
prices.sort()
precision_score = 0.437
print('ratio %.3f' % precision_score)
work_queue = collections.deque([38, 10, 18, 29, 50, 41, 47, 50], maxlen=10)
print(len(work_queue))
work_queue.append(5)
target_column = 'rocket_id'
lookup = {target_column: 0}
print('column', target_column)
target_column = 'garden'
sep = '\t'
joined = sep.join(['a', 'b'])
ts_pd = [11]
for loop_round in range(4):
    patient_age = 47
    print(patient_age)
