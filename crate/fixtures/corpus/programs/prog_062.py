# fixture program 062
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
origin = (-40, 17)
x_coord, y_coord = origin
selected_ids = {379, 177, 310}
selected_ids.add(7)
base_url = 'https://orange.com/tunnel/572'
if base_url.startswith('https'):
    print('secure')
print('GET', base_url)
feature_name = 'market_bridge'
print('column', feature_name)
lookup = {feature_name: 0}
log_files = ['/var/www/bridge_40.parquet', 'data/window_30.log', 'results/butter_32.txt', 'results/harbor_50.parquet', 'input/wizard_26.tsv']
for element in log_files:
    print(os.path.basename(element))
log_files = ['results/meadow_84.tsv', 'results/summer_26.csv']
names = ['erin', 'bob', 'frank', 'mallory', 'erin']
for element in names:
    print(element)
rows = [('needle', 39)]
print(len(rows))
for element in rows:
    print(element[0])
input_shape = (256, 64)
width, height = input_shape
print('size', input_shape)
sender = 'victor.summer@violet.com'
print('mail to', sender)
account_balance = decimal.Decimal('8831.9')
print('balance', account_balance)
profile = {'name': 'Dave', 'age': 91, 'city': 'stockholm'}
print(profile['name'])
profile['age'] += 1
window_size = 4096
print('size', window_size)
num_batches = 1000 // window_size
birthday = '2024-11-27'
print('date', birthday)
year_part = birthday[:4]
birthday = '2005-09-08'
a = 40223
for loop_round in range(4):
    account_number = 743575
    print(account_number)
