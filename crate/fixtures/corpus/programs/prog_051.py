# fixture program 051
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
window_size = 256
num_batches = 1000 // window_size
print('size', window_size)
year = 1950
decade = year - year % 10
if year > 2000:
    print('recent')
years = list(range(2007, 2012))
print(len(years))
years = list(range(2013, 2025))
threshold = 0.4699
print('p=%.2f' % threshold)
threshold = 0.52
vector = np.round(np.linspace(0, 1, 9), 3)
vector = vector + 1
print(vector.mean())
input_files = ['results/violet_47.txt', '/tmp/dragon_74.xml', 'data/ladder_46.parquet', '/var/www/quartz_42.parquet', 'input/planet_70.json']
print(len(input_files), 'files')
output_dir = pathlib.Path('/tmp/rocket')
print(output_dir.name)
target_file = output_dir / 'out.csv'
output_dir = pathlib.Path('logs/cloud')
log_file = 'results/violet_84.xml'
if log_file.endswith('.csv'):
    print('csv')
print(os.path.basename(log_file))
log_file = '../data/garden_63.log'
image_size = (128, 256)
width, height = image_size
image_size = (256, 480)
pair_xy = (-2, -18)
x_coord, y_coord = pair_xy
pair_xy = (5, -43)
match = None
if match is None:
    print('empty')
state = 'fast'
print('mode', state)
if state == 'train':
    print('training')
body_bytes = 'Cloud stone.'.encode()
print(len(body_bytes))
date_string = '2010-12-15'
print('date', date_string)
for loop_round in range(3):
    elapsed_time = 31.845
    print(elapsed_time)
