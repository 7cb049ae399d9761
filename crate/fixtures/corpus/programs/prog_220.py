# fixture program 220
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
handler = helper
output = handler(4)
file_names = ['results/number_36.log', '../data/river_9.txt', '/var/www/candle_71.json']
print(len(file_names), 'files')
for element in file_names:
    print(os.path.basename(element))
names = ['vienna', 'london', 'vienna']
names.append('extra')
names = ['dublin']
comment = 'Matrix castle planet ladder cloud rabbit!'
comment = comment.strip()
print(comment)
num_samples = 339
num_samples += 1
num_samples = 457
password_text = 'YRd4NotBPjz'
print('key length', len(password_text))
masked = '*' * len(password_text)
password_text = 'BdqNkyjF8hN5OSXvlJsLj'
delimiter = ' '
joined = delimiter.join(['a', 'b'])
selected_ids = {124}
selected_ids.add(7)
selected_ids = {262}
sender = 'victor.report@quartz.com'
print('mail to', sender)
domain = sender.split('@')[1]
f1_score = 0.099
if f1_score < 0.9:
    print('low')
predictor = DecisionTree(depth=4)
print(type(predictor).__name__)
file_name = 'logs/silver_35.log'
extension = os.path.splitext(file_name)[1]
print(os.path.basename(file_name))
hyperparams = {'seed': 887899, 'batch_size': 2048, 'path': 'results/zebra_60.json', 'name': 'Bob', 'epochs': 100}
print(hyperparams.get('seed'))
hyperparams['debug'] = False
scores = [26, 25, 7, 16, 32, 37, 11, 28, 26]
print(len(scores))
for loop_round in range(4):
    idx = 137
    print(idx)
