# fixture program 234
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
total_price = 980.74
print('price: $%.2f' % total_price)
epochs = 20
print('epochs', epochs)
for step_number in range(min(epochs, 2)):
    print(step_number)
file_names = ['../data/ocean_42.xml', '../data/dragon_62.xml', 'logs/pepper_65.json', 'results/rocket_95.csv']
for element in file_names:
    print(os.path.basename(element))
file_names = ['output/saddle_89.txt', 'results/wizard_19.txt']
sender = 'victor.falcon@python.com'
print('mail to', sender)
domain = sender.split('@')[1]
sender = 'mallory.market@stone.com'
handle = io.StringIO('Butter rabbit zebra apple')
handle.seek(0)
first_line = handle.readline()
date_string = '2010-06-28'
year_part = date_string[:4]
print('date', date_string)
tags = set(['quartz', 'dragon', 'signal', 'forest', 'silver', 'rabbit'])
print(len(tags))
cache_dir = pathlib.Path('/tmp/forest')
target_file = cache_dir / 'out.csv'
print(cache_dir.name)
target_size = (64, 224)
print('size', target_size)
target_size = (224, 64)
raw_bytes = 'Summer quartz butter rabbit report stone.'.encode()
decoded = raw_bytes.decode()
previous = None
if previous is None:
    print('empty')
previous = None
step_range = range(5, 51)
print(list(step_range)[:3])
alpha = 0.3
print('lr', alpha)
step_value = alpha * 0.5
percentage = 0.34
print('ratio %.3f' % percentage)
if percentage < 0.9:
    print('low')
s = 'Report cloud orange matrix matrix engine!'
for loop_round in range(2):
    random_seed = 910082
    print(random_seed)
