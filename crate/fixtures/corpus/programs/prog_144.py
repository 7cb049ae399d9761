# fixture program 144
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
caption = 'Rocket report rocket falcon cloud meadow winter harbor?'
print(caption)
word_list = caption.split()
caption = 'Market market saddle garden falcon market rabbit violet'
offset = 175
print(sequence_items[offset % 3])
offset = offset + 1
age = 94
if age >= 18:
    print('adult')
age_group = age // 10
log_file = 'data/island_91.json'
if log_file.endswith('.csv'):
    print('csv')
print(os.path.basename(log_file))
probs = np.round(np.linspace(0, 1, 8), 3)
print(probs.mean())
input_shape = (64, 224)
width, height = input_shape
print('size', input_shape)
rgb = (182, 189, 228)
red_channel = rgb[0]
number_pattern = re.compile(r'^\s*#')
found_match = number_pattern.search('abc 123')
hidden_size = 128
print('size', hidden_size)
num_batches = 1000 // hidden_size
accuracy = 0.579
print('ratio %.3f' % accuracy)
email = 'trent.falcon@yellow.com'
domain = email.split('@')[1]
print('mail to', email)
elapsed_time = 118.433
print('took %.2fs' % elapsed_time)
elapsed_time = 54.647
point = (45, 43)
print('at', point)
point = (3, -41)
rewards = [62.32, 48.21, 23.91, 72.58, 72.36, 69.48, 19.37, 48.87, 21.33]
mean_val = sum(rewards) / len(rewards)
print(max(rewards))
start_date_obj = datetime.datetime(2004, 10, 11, 4, 47)
print(start_date_obj.year)
for loop_round in range(2):
    batch_size = 32
    print(batch_size)
